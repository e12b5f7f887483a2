#pragma once

// Test-only reference constructions that avoid every library code path.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace brute {

// Symmetrize |e...e g...g> (k excitations) over all orderings of the n factors
// and normalize. Particle 0 is the most significant bit of the basis index.
inline std::vector<double> symmetrized_dicke(int n, int k) {
  std::vector<int> bits(static_cast<std::size_t>(n), 0);
  std::fill(bits.begin(), bits.begin() + k, 1);
  std::sort(bits.begin(), bits.end());
  std::vector<double> amps(std::size_t{1} << n, 0.0);
  do {
    std::size_t idx = 0;
    for (int b : bits) idx = (idx << 1) | static_cast<std::size_t>(b);
    amps[idx] += 1.0;
  } while (std::next_permutation(bits.begin(), bits.end()));
  double norm = 0.0;
  for (double a : amps) norm += a * a;
  norm = std::sqrt(norm);
  for (double& a : amps) a /= norm;
  return amps;
}

// Swap the tensor factors at positions i and i+1 (position 0 = most significant).
inline std::vector<double> swap_adjacent(const std::vector<double>& amps, int n, int i) {
  std::vector<double> out(amps.size());
  const int hi = n - 1 - i;
  const int lo = hi - 1;
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    const std::size_t bh = (idx >> hi) & 1U;
    const std::size_t bl = (idx >> lo) & 1U;
    std::size_t swapped = idx & ~((std::size_t{1} << hi) | (std::size_t{1} << lo));
    swapped |= (bl << hi) | (bh << lo);
    out[swapped] = amps[idx];
  }
  return out;
}

// Two-level entropy from explicit weights; 0 ln 0 = 0.
inline double entropy(const std::vector<double>& w) {
  double total = std::accumulate(w.begin(), w.end(), 0.0);
  double s = 0.0;
  for (double x : w) {
    const double p = x / total;
    if (p > 0) s -= p * std::log(p);
  }
  return s;
}

}  // namespace brute
