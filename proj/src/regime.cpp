#include "symwork/regime.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "symwork/errors.hpp"
#include "symwork/numeric.hpp"

namespace symwork {

DensityGrid::DensityGrid(int dims, std::vector<double> spacings, std::vector<double> values)
    : dims_(dims), spacings_(std::move(spacings)), values_(std::move(values)) {
  if (dims_ < 1 || dims_ > 3) {
    throw ValidationError("density grid must have 1, 2 or 3 dimensions, got " + std::to_string(dims_));
  }
  if (static_cast<int>(spacings_.size()) != dims_) {
    throw ValidationError("density grid of " + std::to_string(dims_) + " dimensions needs " +
                          std::to_string(dims_) + " spacings, got " +
                          std::to_string(spacings_.size()));
  }
  for (double h : spacings_) {
    if (!(h > 0.0) || !std::isfinite(h)) {
      throw ValidationError("grid spacings must be finite and positive, got " + std::to_string(h));
    }
  }
  if (values_.empty()) throw ValidationError("density grid has no samples");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] >= 0.0) || !std::isfinite(values_[i])) {
      throw ValidationError("density sample " + std::to_string(i) +
                            " is negative or not finite: " + std::to_string(values_[i]));
    }
  }
}

double DensityGrid::cell_volume() const noexcept {
  double v = 1.0;
  for (double h : spacings_) v *= h;
  return v;
}

double DensityGrid::integral() const { return numeric::pairwise_sum(values_) * cell_volume(); }

void DensityGrid::check_normalized(double tolerance) const {
  const double total = integral();
  if (!(std::abs(total - 1.0) <= tolerance)) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "density is not normalized: integral of |psi|^2 = " << total << " (tolerance "
        << tolerance << ")";
    throw ValidationError(msg.str());
  }
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<double> parse_row(std::string_view line, std::size_t line_no) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= line.size()) {
    const auto comma = line.find(',', start);
    const auto field = trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
    if (field.empty()) throw ParseError("empty field", line_no);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
      throw ParseError("not a number: '" + std::string(field) + "'", line_no);
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

DensityGrid read_density_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  int dims = 0;
  std::size_t header_line = 0;
  std::vector<double> spacings;
  std::vector<double> values;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto row = parse_row(body, line_no);
    if (!have_header) {
      const double d = row.front();
      if (d != std::floor(d) || d < 1 || d > 3) {
        throw ParseError("header must start with dims in {1, 2, 3}", line_no);
      }
      dims = static_cast<int>(d);
      if (row.size() != static_cast<std::size_t>(dims) + 1) {
        throw ParseError("header needs dims followed by " + std::to_string(dims) + " spacings", line_no);
      }
      spacings.assign(row.begin() + 1, row.end());
      have_header = true;
      header_line = line_no;
      continue;
    }
    for (double v : row) {
      if (v < 0.0) throw ParseError("negative density sample", line_no);
    }
    values.insert(values.end(), row.begin(), row.end());
  }
  if (!have_header) throw ParseError("missing header row", line_no + 1);
  if (values.empty()) throw ParseError("no density samples after header", header_line + 1);
  try {
    return DensityGrid(dims, std::move(spacings), std::move(values));
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), header_line);
  }
}

DensityGrid load_density_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open density file '" + path + "'");
  return read_density_csv(in);
}

void write_density_csv(std::ostream& out, const DensityGrid& grid, int samples_per_row) {
  const auto old_precision = out.precision(17);
  out << grid.dims();
  for (double h : grid.spacings()) out << ',' << h;
  out << '\n';
  const auto& v = grid.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    out << v[i];
    const bool row_end = (i + 1) % static_cast<std::size_t>(samples_per_row) == 0 || i + 1 == v.size();
    out << (row_end ? '\n' : ',');
  }
  out.precision(old_precision);
}

double u_int_from_density(const DensityGrid& grid, std::int64_t n_particles, double coupling,
                          double norm_tolerance) {
  if (n_particles < 1) throw DomainError("u_int needs N >= 1");
  if (!(coupling >= 0.0)) throw DomainError("coupling scale must be >= 0");
  grid.check_normalized(norm_tolerance);
  std::vector<double> squares(grid.values().size());
  for (std::size_t i = 0; i < squares.size(); ++i) squares[i] = grid.values()[i] * grid.values()[i];
  const double u_total = coupling * numeric::pairwise_sum(squares) * grid.cell_volume();
  return u_total / static_cast<double>(n_particles);
}

std::string_view to_string(Regime r) noexcept {
  return r == Regime::individual ? "individual" : "collective";
}

RegimeVerdict recoil_gate(double omega_r, double u_int) {
  if (!(omega_r >= 0.0) || !(u_int >= 0.0)) {
    throw DomainError("recoil gate needs non-negative omega_r and u_int");
  }
  return {omega_r > u_int ? Regime::individual : Regime::collective, omega_r, u_int};
}

double phonon_dispersion(double c_spring, double mass, double k_momentum, double a_lattice) {
  if (!(c_spring > 0.0) || !(mass > 0.0) || !(a_lattice > 0.0)) {
    throw DomainError("phonon dispersion needs positive stiffness, mass and lattice spacing");
  }
  if (!(k_momentum >= 0.0)) throw DomainError("phonon wavenumber must be >= 0");
  // 1 - cos(ka) = 2 sin^2(ka/2) avoids cancellation at small ka.
  const double s = std::sin(0.5 * k_momentum * a_lattice);
  return std::sqrt(2.0 * c_spring / mass) * std::sqrt(2.0 * s * s);
}

}  // namespace symwork
