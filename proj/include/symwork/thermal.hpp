#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace symwork {

/// Bath and ladder parameters in natural units (hbar = k_B = 1).
///
/// beta_tilde is hbar*omega_eg / (k_B T). Zero is accepted so the
/// infinite-temperature limit can be probed; operations that divide by it
/// reject it individually.
struct ThermalParams {
  double beta_tilde = 10.0;
  double omega_eg = 1.0;
  int k_max = 1;

  void validate() const;
};

/// Diagonal density operator on the Dicke ladder |n,0>, |n,1>, ... of `n` bosons.
/// weights()[k] is the population of |n,k>.
class SymmetricDensity {
 public:
  static constexpr double kNormTolerance = 1e-12;

  SymmetricDensity(std::int64_t n_particles, std::vector<double> weights);

  static SymmetricDensity pure(std::int64_t n_particles, std::int64_t k);

  std::int64_t n_particles() const noexcept { return n_; }
  std::span<const double> weights() const noexcept { return weights_; }
  int levels() const noexcept { return static_cast<int>(weights_.size()); }
  double weight(std::int64_t k) const noexcept {
    return k >= 0 && k < static_cast<std::int64_t>(weights_.size()) ? weights_[k] : 0.0;
  }
  double mean_excitation() const;

 private:
  std::int64_t n_;
  std::vector<double> weights_;
};

struct Occupation {
  double x;      // bare Boltzmann factor exp(-beta_tilde)
  double p_tot;  // partition sum over ladder levels 0..k_max
};

Occupation occupation_x(const ThermalParams& params);

/// Weights x^k / P over k = 0..min(k_max, n); level k has energy k*omega_eg.
SymmetricDensity thermal_state(std::int64_t n, const ThermalParams& params);

double mean_energy(const SymmetricDensity& rho, const ThermalParams& params);

/// -sum_k w_k ln w_k, in units of k_B.
double von_neumann_entropy(const SymmetricDensity& rho);

/// Leading low-temperature entropy x * beta_tilde.
double entropy_lowT_approx(double x, double beta_tilde);

/// Bose-Einstein occupation 1/(e^beta - 1).
double photon_nbar(double beta_tilde);

}  // namespace symwork
