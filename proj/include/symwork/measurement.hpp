#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "symwork/thermal.hpp"

namespace symwork {

enum class Outcome { ground, excited };

std::string_view to_string(Outcome o) noexcept;

/// One branch of the recoil measurement. conditional_state is empty when the
/// branch has zero probability; a state is never fabricated for it.
struct MeasurementResult {
  Outcome outcome;
  double probability;
  std::optional<SymmetricDensity> conditional_state;
};

struct MeasurementBranches {
  MeasurementResult ground;
  MeasurementResult excited;

  const MeasurementResult& operator[](Outcome o) const noexcept {
    return o == Outcome::ground ? ground : excited;
  }
};

/// Projective {g, e} measurement of the last boson of an (N+1)-particle ladder
/// state. Both conditional states describe the remaining N bosons.
MeasurementBranches measure_one_boson(const SymmetricDensity& rho);

/// Entropy of the conditional state. Throws DomainError on a zero-probability branch.
double post_measurement_entropy(const MeasurementResult& result);

struct OutcomeCounts {
  std::uint64_t ground = 0;
  std::uint64_t excited = 0;
};

/// Uniform double in [0, 1) built from the top 53 bits of a 64-bit Mersenne
/// Twister draw, so sequences are identical across standard libraries.
class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

OutcomeCounts sample_outcomes(const SymmetricDensity& rho, std::uint64_t trials, std::uint64_t seed);

}  // namespace symwork
