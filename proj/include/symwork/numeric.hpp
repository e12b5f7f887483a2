#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace symwork::numeric {

inline double log_factorial(long long n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// ln C(n, k); valid for 0 <= k <= n and n far beyond the range of exact integers.
inline double log_binomial(long long n, long long k) {
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

// Deterministic pairwise summation: the result depends only on the order of
// the input, not on how the caller partitions the work.
inline double pairwise_sum(std::span<const double> v) {
  constexpr std::size_t kLeaf = 64;
  if (v.size() <= kLeaf) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

// -p ln p with the 0 ln 0 = 0 convention.
inline double entropy_term(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

}  // namespace symwork::numeric
