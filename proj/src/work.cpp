#include "symwork/work.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symwork/errors.hpp"
#include "symwork/numeric.hpp"

namespace symwork {

namespace {

double entropy_of(std::vector<double> weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  for (double& w : weights) w /= total;
  const auto n = std::max<std::int64_t>(1, static_cast<std::int64_t>(weights.size()) - 1);
  return von_neumann_entropy(SymmetricDensity(n, std::move(weights)));
}

// Work for the same outcome on an untruncated ladder of infinitely many bosons:
// the g branch leaves the thermal weights untouched, the e branch reweights
// level k-1 by k * w_k.
double large_n_work(Outcome outcome, const ThermalParams& params) {
  if (outcome == Outcome::ground) return 0.0;
  std::vector<double> thermal(static_cast<std::size_t>(params.k_max) + 1);
  for (std::size_t k = 0; k < thermal.size(); ++k) {
    thermal[k] = std::exp(-static_cast<double>(k) * params.beta_tilde);
  }
  std::vector<double> after_e(static_cast<std::size_t>(params.k_max));
  for (std::size_t k = 1; k < thermal.size(); ++k) {
    after_e[k - 1] = static_cast<double>(k) * thermal[k];
  }
  return extract_work(entropy_of(std::move(thermal)), entropy_of(std::move(after_e)), params);
}

}  // namespace

double WorkLedger::cumulative_work() const {
  double w = 0.0;
  for (const auto& e : entries) w += e.work_extracted;
  return w;
}

void WorkLedger::check_invariants() const {
  for (const auto& e : entries) {
    const double imbalance = e.heat_from_bath - (e.work_extracted + e.internal_energy_change);
    if (std::abs(imbalance) > kBalanceTolerance) {
      throw InvariantError("cycle " + std::to_string(e.index) +
                           ": heat_from_bath != work + dU, imbalance " + std::to_string(imbalance));
    }
    if (e.n_after != e.n_before - 1) {
      throw InvariantError("cycle " + std::to_string(e.index) + ": particle count not decremented");
    }
    if (params.k_max == 1 && e.outcome == Outcome::excited &&
        e.energy_removed_by_recoil != params.omega_eg) {
      throw InvariantError("cycle " + std::to_string(e.index) +
                           ": excited recoil must remove exactly one quantum omega_eg");
    }
  }
}

void EIWEParams::validate() const {
  if (!(xi >= 0.0 && xi <= 1.0)) {
    throw DomainError("entanglement degree xi must lie in [0, 1], got " + std::to_string(xi));
  }
  if (!(nbar >= 0.0)) throw DomainError("nbar must be >= 0, got " + std::to_string(nbar));
}

SymmetricDensity rethermalize(std::int64_t n, const ThermalParams& params) {
  return thermal_state(n, params);
}

double extract_work(double s_ther, double s_meas, const ThermalParams& params) {
  if (params.beta_tilde == 0.0) {
    throw DomainError("work extraction needs beta_tilde > 0 (infinite temperature)");
  }
  params.validate();
  return params.omega_eg * (s_ther - s_meas) / params.beta_tilde;
}

WorkLedger run_cycles(std::int64_t n0, const ThermalParams& params, int n_cycles,
                      std::uint64_t seed, bool post_select_e) {
  params.validate();
  if (n_cycles < 0) throw DomainError("cycle count must be >= 0");
  // Every cycle needs at least two bosons before its measurement.
  if (n0 < static_cast<std::int64_t>(n_cycles) + 1 || n0 < 2) {
    throw CapacityError("particle count underflow: " + std::to_string(n_cycles) +
                        " cycles need n0 >= " + std::to_string(std::max(n_cycles + 1, 2)) +
                        ", got " + std::to_string(n0));
  }

  WorkLedger ledger{params, seed, post_select_e, {}};
  ledger.entries.reserve(static_cast<std::size_t>(n_cycles));
  UniformSource uniform(seed);
  const double w_large_n_e = n_cycles > 0 ? large_n_work(Outcome::excited, params) : 0.0;

  SymmetricDensity state = thermal_state(n0, params);
  for (int i = 0; i < n_cycles; ++i) {
    const MeasurementBranches branches = measure_one_boson(state);
    Outcome outcome = Outcome::excited;
    if (post_select_e) {
      if (!branches.excited.conditional_state) {
        throw DomainError("cannot post-select outcome e: its probability is zero at beta_tilde = " +
                          std::to_string(params.beta_tilde));
      }
    } else {
      outcome = uniform.next() < branches.excited.probability ? Outcome::excited : Outcome::ground;
    }
    const MeasurementResult& result = branches[outcome];

    CycleEntry e;
    e.index = i;
    e.n_before = state.n_particles();
    e.n_after = e.n_before - 1;
    e.outcome = outcome;
    e.outcome_probability = result.probability;
    e.s_meas = post_measurement_entropy(result);
    SymmetricDensity ther = rethermalize(e.n_after, params);
    e.s_ther = von_neumann_entropy(ther);
    e.work_extracted = extract_work(e.s_ther, e.s_meas, params);
    e.internal_energy_change =
        mean_energy(ther, params) - mean_energy(*result.conditional_state, params);
    e.heat_from_bath = e.work_extracted + e.internal_energy_change;
    // The measured boson carries one quantum exactly when found excited.
    e.energy_removed_by_recoil = outcome == Outcome::excited ? params.omega_eg : 0.0;
    e.finite_size_correction =
        e.work_extracted - (outcome == Outcome::excited ? w_large_n_e : 0.0);
    ledger.entries.push_back(e);
    state = std::move(ther);
  }
  ledger.check_invariants();
  return ledger;
}

double eiwe_work(const EIWEParams& p) {
  p.validate();
  return p.xi * p.nbar * p.omega_a;
}

double condensate_work(std::int64_t n, const ThermalParams& params) {
  return run_cycles(n, params, 1, 0, true).entries.front().work_extracted;
}

double two_mode_bell_work(const ThermalParams& params) { return condensate_work(2, params); }

}  // namespace symwork
