#include "symwork/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "symwork/errors.hpp"
#include "symwork/numeric.hpp"

namespace symwork {

std::string_view to_string(Outcome o) noexcept { return o == Outcome::ground ? "g" : "e"; }

namespace {

MeasurementResult make_branch(Outcome outcome, std::int64_t n_rest, std::vector<double> unnormalized) {
  const double p = numeric::pairwise_sum(unnormalized);
  if (p <= 0.0) return {outcome, 0.0, std::nullopt};
  for (double& w : unnormalized) w /= p;
  return {outcome, p, SymmetricDensity(n_rest, std::move(unnormalized))};
}

}  // namespace

MeasurementBranches measure_one_boson(const SymmetricDensity& rho) {
  const std::int64_t n = rho.n_particles();
  if (n < 2) {
    throw DomainError("measuring one boson needs n >= 2 so a remainder exists, got n = " +
                      std::to_string(n));
  }
  const auto w = rho.weights();
  const double nd = static_cast<double>(n);

  // |n,k> = sqrt((n-k)/n) |n-1,k>|g> + sqrt(k/n) |n-1,k-1>|e>; distinct k stay
  // orthogonal in the remainder, so diagonal mixtures map to diagonal mixtures.
  std::vector<double> to_g(std::min<std::size_t>(w.size(), static_cast<std::size_t>(n)), 0.0);
  std::vector<double> to_e(std::max<std::size_t>(w.size() - 1, 1), 0.0);
  for (std::size_t k = 0; k < w.size(); ++k) {
    const double kd = static_cast<double>(k);
    if (k < to_g.size()) to_g[k] += w[k] * (nd - kd) / nd;
    if (k >= 1) to_e[k - 1] += w[k] * kd / nd;
  }

  MeasurementBranches out{make_branch(Outcome::ground, n - 1, std::move(to_g)),
                          make_branch(Outcome::excited, n - 1, std::move(to_e))};
  const double total = out.ground.probability + out.excited.probability;
  if (std::abs(total - 1.0) > 1e-12) {
    throw InvariantError("outcome probabilities sum to " + std::to_string(total));
  }
  return out;
}

double post_measurement_entropy(const MeasurementResult& result) {
  if (!result.conditional_state) {
    throw DomainError("outcome " + std::string(to_string(result.outcome)) +
                      " has zero probability; its conditional state is undefined");
  }
  return von_neumann_entropy(*result.conditional_state);
}

OutcomeCounts sample_outcomes(const SymmetricDensity& rho, std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw DomainError("sampling needs at least one trial");
  const double p_e = measure_one_boson(rho).excited.probability;
  UniformSource u(seed);
  OutcomeCounts counts;
  for (std::uint64_t t = 0; t < trials; ++t) {
    if (u.next() < p_e) {
      ++counts.excited;
    } else {
      ++counts.ground;
    }
  }
  return counts;
}

}  // namespace symwork
