#include "symwork/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symwork/errors.hpp"
#include "symwork/numeric.hpp"

namespace symwork {

void ThermalParams::validate() const {
  if (!(beta_tilde >= 0.0) || !std::isfinite(beta_tilde)) {
    throw DomainError("beta_tilde must be finite and >= 0, got " + std::to_string(beta_tilde));
  }
  if (!(omega_eg > 0.0) || !std::isfinite(omega_eg)) {
    throw DomainError("omega_eg must be finite and > 0, got " + std::to_string(omega_eg));
  }
  if (k_max < 1) {
    throw DomainError("k_max must be >= 1, got " + std::to_string(k_max));
  }
}

SymmetricDensity::SymmetricDensity(std::int64_t n_particles, std::vector<double> weights)
    : n_(n_particles), weights_(std::move(weights)) {
  if (n_ < 1) throw DomainError("density needs n >= 1, got " + std::to_string(n_));
  if (weights_.empty()) throw DomainError("density needs at least one ladder level");
  if (static_cast<std::int64_t>(weights_.size()) > n_ + 1) {
    throw DomainError("ladder of " + std::to_string(n_) + " particles has at most " +
                      std::to_string(n_ + 1) + " levels, got " + std::to_string(weights_.size()));
  }
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw DomainError("ladder weights must be finite and non-negative, got " + std::to_string(w));
    }
  }
  const double total = numeric::pairwise_sum(weights_);
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw DomainError("ladder weights must sum to 1, got " + std::to_string(total));
  }
}

SymmetricDensity SymmetricDensity::pure(std::int64_t n_particles, std::int64_t k) {
  if (k < 0 || k > n_particles) {
    throw DomainError("pure ladder state needs 0 <= k <= n");
  }
  std::vector<double> w(static_cast<std::size_t>(k) + 1, 0.0);
  w.back() = 1.0;
  return {n_particles, std::move(w)};
}

double SymmetricDensity::mean_excitation() const {
  double m = 0.0;
  for (std::size_t k = 0; k < weights_.size(); ++k) m += static_cast<double>(k) * weights_[k];
  return m;
}

Occupation occupation_x(const ThermalParams& params) {
  params.validate();
  const double x = std::exp(-params.beta_tilde);
  double p_tot = 0.0;
  for (int k = 0; k <= params.k_max; ++k) p_tot += std::exp(-k * params.beta_tilde);
  return {x, p_tot};
}

SymmetricDensity thermal_state(std::int64_t n, const ThermalParams& params) {
  params.validate();
  const std::int64_t top = std::min<std::int64_t>(params.k_max, n);
  std::vector<double> w(static_cast<std::size_t>(top) + 1);
  double total = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    w[k] = std::exp(-static_cast<double>(k) * params.beta_tilde);
    total += w[k];
  }
  for (double& wk : w) wk /= total;
  return {n, std::move(w)};
}

double mean_energy(const SymmetricDensity& rho, const ThermalParams& params) {
  return rho.mean_excitation() * params.omega_eg;
}

double von_neumann_entropy(const SymmetricDensity& rho) {
  const auto& w = rho.weights();
  // ln of the dominant weight via log1p of the remainder keeps S accurate when w_max ~ 1.
  const auto top = static_cast<std::size_t>(std::max_element(w.begin(), w.end()) - w.begin());
  std::vector<double> rest;
  rest.reserve(w.size());
  double s_rest = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k == top) continue;
    rest.push_back(w[k]);
    s_rest += numeric::entropy_term(w[k]);
  }
  const double tail = numeric::pairwise_sum(rest);
  const double s_top = w[top] > 0.0 ? -w[top] * std::log1p(-tail) : 0.0;
  return s_top + s_rest;
}

double entropy_lowT_approx(double x, double beta_tilde) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError("low-temperature entropy needs 0 <= x < 1, got " + std::to_string(x));
  }
  return x * beta_tilde;
}

double photon_nbar(double beta_tilde) {
  if (beta_tilde == 0.0) {
    throw DomainError("mean occupation diverges at beta_tilde = 0");
  }
  if (!(beta_tilde > 0.0)) {
    throw DomainError("mean occupation needs beta_tilde > 0, got " + std::to_string(beta_tilde));
  }
  return 1.0 / std::expm1(beta_tilde);
}

}  // namespace symwork
