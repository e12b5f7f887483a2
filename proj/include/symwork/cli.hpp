#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace symwork::cli {

inline constexpr std::uint64_t kDefaultSeed = 20211027;
inline constexpr const char* kOutputDirEnv = "SYMWORK_OUTPUT_DIR";

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kValidation = 3,
  kInvariant = 4,
};

// CODATA 2018 exact values.
inline constexpr double kHbar = 1.054571817e-34;  // J s
inline constexpr double kBoltzmann = 1.380649e-23;  // J / K

/// hbar*omega / (k_B T) for omega in rad/s and T in kelvin.
double beta_tilde_from_si(double omega_eg, double temperature);

/// Runs the command line `args` (program name excluded). Tables go to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symwork::cli
