#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace symwork {

inline constexpr int kDefaultOracleCap = 12;

/// Permutation-symmetric state of `n` two-level bosons carrying `k` excitations.
///
/// Only the labels are stored; amplitudes over product states are uniform
/// (1/sqrt(C(n,k))) and are materialized on demand by embed_full().
class DickeKet {
 public:
  DickeKet(std::int64_t n_particles, std::int64_t excitations);

  std::int64_t n_particles() const noexcept { return n_; }
  std::int64_t excitations() const noexcept { return k_; }

  friend bool operator==(const DickeKet&, const DickeKet&) = default;

 private:
  std::int64_t n_;
  std::int64_t k_;
};

/// Schmidt split of |n,k> over its last tensor factor:
///   |n,k> = c_ground |n-1,k> (x) |g> + c_excited |n-1,k-1> (x) |e>
struct ParticleSplit {
  double c_ground;
  double c_excited;
};

DickeKet make_dicke(std::int64_t n, std::int64_t k);

ParticleSplit split_one_particle(const DickeKet& state);

/// Uniform amplitude 1/sqrt(C(n,k)) carried by each product state in |n,k>.
double dicke_amplitude(const DickeKet& state);

/// Amplitudes over the 2^n product basis. Basis index bit (n-1-i) is the
/// state of particle i (1 = excited), so the last particle is the least
/// significant bit and {gg, ge, eg, ee} map to indices 0..3.
std::vector<double> embed_full(const DickeKet& state, int cap = kDefaultOracleCap);

}  // namespace symwork
