#pragma once

#include <cstdint>
#include <vector>

#include "symwork/measurement.hpp"
#include "symwork/thermal.hpp"

namespace symwork {

/// One measure -> rethermalize step. Energies are in the units of omega_eg.
///
/// Sign convention: work_extracted = T (S_ther - S_meas) is delivered to the
/// load, internal_energy_change = E(rho_ther) - E(rho_meas) stays in the
/// condensate, and heat_from_bath pays for both.
struct CycleEntry {
  int index = 0;
  std::int64_t n_before = 0;
  std::int64_t n_after = 0;
  Outcome outcome = Outcome::excited;
  double outcome_probability = 0.0;
  double s_meas = 0.0;
  double s_ther = 0.0;
  double work_extracted = 0.0;
  double heat_from_bath = 0.0;
  double internal_energy_change = 0.0;
  double energy_removed_by_recoil = 0.0;
  // work_extracted minus its N -> infinity value for the same outcome
  double finite_size_correction = 0.0;
};

struct WorkLedger {
  static constexpr double kBalanceTolerance = 1e-12;

  ThermalParams params;
  std::uint64_t seed = 0;
  bool post_selected = false;
  std::vector<CycleEntry> entries;

  double cumulative_work() const;
  /// Throws InvariantError when the first-law balance or the recoil energy
  /// bookkeeping fails on any entry.
  void check_invariants() const;
};

struct EIWEParams {
  double xi = 1.0;
  double nbar = 0.0;
  double omega_a = 1.0;

  void validate() const;
};

SymmetricDensity rethermalize(std::int64_t n, const ThermalParams& params);

/// W = k_B T (s_ther - s_meas), returned in units of omega_eg.
double extract_work(double s_ther, double s_meas, const ThermalParams& params);

/// Sequential cycles starting from the thermal state of n0 bosons. With
/// post_select_e every cycle conditions on the excited outcome; otherwise the
/// outcome is drawn from a generator seeded with `seed`.
WorkLedger run_cycles(std::int64_t n0, const ThermalParams& params, int n_cycles,
                      std::uint64_t seed, bool post_select_e);

double eiwe_work(const EIWEParams& p);

/// Condensate pipeline at N+1 = 2, where the first excited state is the
/// two-mode Bell state (|1,0> + |0,1>)/sqrt(2), post-selected on outcome e.
double two_mode_bell_work(const ThermalParams& params);

/// Work from one post-selected excited-outcome cycle on an n-boson thermal state.
double condensate_work(std::int64_t n, const ThermalParams& params);

}  // namespace symwork
