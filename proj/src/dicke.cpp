#include "symwork/dicke.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "symwork/errors.hpp"
#include "symwork/numeric.hpp"

namespace symwork {

DickeKet::DickeKet(std::int64_t n_particles, std::int64_t excitations)
    : n_(n_particles), k_(excitations) {
  if (n_ < 1) {
    throw DomainError("Dicke state needs n >= 1, got n = " + std::to_string(n_));
  }
  if (k_ < 0) {
    throw DomainError("Dicke state needs k >= 0, got k = " + std::to_string(k_));
  }
  if (k_ > n_) {
    throw DomainError("Dicke state needs k <= n, got k = " + std::to_string(k_) +
                      " > n = " + std::to_string(n_));
  }
}

DickeKet make_dicke(std::int64_t n, std::int64_t k) { return DickeKet(n, k); }

ParticleSplit split_one_particle(const DickeKet& state) {
  const auto n = state.n_particles();
  const auto k = state.excitations();
  if (n < 2) {
    throw DomainError("splitting off one particle needs n >= 2, got n = " + std::to_string(n));
  }
  if (k == 0) return {1.0, 0.0};
  const double nd = static_cast<double>(n);
  return {std::sqrt(static_cast<double>(n - k) / nd), std::sqrt(static_cast<double>(k) / nd)};
}

double dicke_amplitude(const DickeKet& state) {
  return std::exp(-0.5 * numeric::log_binomial(state.n_particles(), state.excitations()));
}

std::vector<double> embed_full(const DickeKet& state, int cap) {
  const auto n = state.n_particles();
  if (n > cap) {
    throw CapacityError("full-space embedding limited to n <= " + std::to_string(cap) +
                        ", got n = " + std::to_string(n));
  }
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> amps(dim, 0.0);
  // Exact count keeps the norm at 1 to rounding even where lgamma is a few ulp off.
  std::size_t count = 0;
  for (std::size_t idx = 0; idx < dim; ++idx) {
    if (static_cast<std::int64_t>(std::popcount(idx)) == state.excitations()) ++count;
  }
  const double a = 1.0 / std::sqrt(static_cast<double>(count));
  for (std::size_t idx = 0; idx < dim; ++idx) {
    if (static_cast<std::int64_t>(std::popcount(idx)) == state.excitations()) amps[idx] = a;
  }
  return amps;
}

}  // namespace symwork
