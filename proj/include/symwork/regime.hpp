#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace symwork {

/// Samples of |psi|^2 on a uniform rectangular grid in 1, 2 or 3 dimensions,
/// flattened in row-major order. Only the cell volume enters the midpoint
/// quadrature, so the per-axis extents are not stored.
class DensityGrid {
 public:
  static constexpr double kDefaultNormTolerance = 1e-6;

  DensityGrid(int dims, std::vector<double> spacings, std::vector<double> values);

  int dims() const noexcept { return dims_; }
  const std::vector<double>& spacings() const noexcept { return spacings_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double cell_volume() const noexcept;

  /// Midpoint-rule integral of the samples; 1 for a normalized density.
  double integral() const;

  /// Throws ValidationError reporting the integral if |integral - 1| > tolerance.
  void check_normalized(double tolerance = kDefaultNormTolerance) const;

 private:
  int dims_;
  std::vector<double> spacings_;
  std::vector<double> values_;
};

/// Reads the grid CSV format: the first data row is `dims,spacing_1[,...]`,
/// every following row holds comma-separated samples continuing the
/// row-major sequence. Blank lines and lines starting with '#' are ignored.
DensityGrid read_density_csv(std::istream& in);
DensityGrid load_density_csv(const std::string& path);
void write_density_csv(std::ostream& out, const DensityGrid& grid, int samples_per_row = 8);

/// u_int = coupling * sum(|psi|^4) * dV / N.
double u_int_from_density(const DensityGrid& grid, std::int64_t n_particles, double coupling = 1.0,
                          double norm_tolerance = DensityGrid::kDefaultNormTolerance);

enum class Regime { collective, individual };

std::string_view to_string(Regime r) noexcept;

struct RegimeVerdict {
  Regime regime;
  double omega_r;
  double u_int;
};

/// Individual recoil iff omega_r > u_int strictly; a tie stays collective.
RegimeVerdict recoil_gate(double omega_r, double u_int);

/// Nearest-neighbour chain: omega_k = sqrt(2C/M) * sqrt(1 - cos(k a)).
double phonon_dispersion(double c_spring, double mass, double k_momentum, double a_lattice);

}  // namespace symwork
