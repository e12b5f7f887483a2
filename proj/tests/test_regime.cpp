#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "symwork/errors.hpp"
#include "symwork/regime.hpp"

using namespace symwork;

namespace {

// Normalized Gaussian |psi|^2 sampled at cell midpoints over [-w sigma, w sigma].
DensityGrid gaussian_1d(double sigma, int points, double half_width = 10.0) {
  const double L = 2 * half_width * sigma;
  const double h = L / points;
  std::vector<double> v(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double x = -half_width * sigma + (i + 0.5) * h;
    v[static_cast<std::size_t>(i)] = std::exp(-x * x / (2 * sigma * sigma)) / (sigma * std::sqrt(2 * std::numbers::pi));
  }
  return DensityGrid(1, {h}, std::move(v));
}

// |psi|^2 = 0.5 + x on [0, 1]: midpoint sums integrate it exactly, but not its square.
DensityGrid linear_density(int points) {
  const double h = 1.0 / points;
  std::vector<double> v(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) v[static_cast<std::size_t>(i)] = 0.5 + (i + 0.5) * h;
  return DensityGrid(1, {h}, std::move(v));
}

}  // namespace

TEST_CASE("uniform box") {
  const double L = 2.0;
  const int points = 1000;
  const DensityGrid g(1, {L / points}, std::vector<double>(points, 1.0 / L));
  CHECK(u_int_from_density(g, 1) == doctest::Approx(1.0 / L).epsilon(1e-13));
  CHECK(u_int_from_density(g, 50) == doctest::Approx(1.0 / (50 * L)).epsilon(1e-13));

  const DensityGrid cube(3, {0.1, 0.1, 0.1}, std::vector<double>(1000, 1.0));
  CHECK(u_int_from_density(cube, 4) == doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("Gaussian density against the closed form") {
  for (double sigma : {0.5, 1.0, 3.0}) {
    const double closed = 1.0 / (2 * sigma * std::sqrt(std::numbers::pi));
    CHECK(u_int_from_density(gaussian_1d(sigma, 10000), 1) == doctest::Approx(closed).epsilon(1e-10));
    CHECK(u_int_from_density(gaussian_1d(sigma, 10000), 7) == doctest::Approx(closed / 7).epsilon(1e-10));
  }
}

TEST_CASE("zero coupling") {
  const auto g = gaussian_1d(1.0, 2000);
  const double u = u_int_from_density(g, 10, 0.0);
  CHECK(u == 0.0);
  CHECK(recoil_gate(1e-30, u).regime == Regime::individual);
  CHECK(recoil_gate(0.0, u).regime == Regime::collective);
  CHECK(u_int_from_density(g, 10, 2.5) == doctest::Approx(2.5 * u_int_from_density(g, 10)));
}

TEST_CASE("unnormalized grids are rejected with the integral in the message") {
  const DensityGrid g(1, {0.1}, std::vector<double>(10, 2.0));
  try {
    u_int_from_density(g, 1);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("= 2") != std::string::npos);
  }
  CHECK_NOTHROW(u_int_from_density(g, 1, 1.0, 1.5));
  CHECK_THROWS_AS(DensityGrid(1, {0.1}, {0.5, -0.1}), ValidationError);
  CHECK_THROWS_AS(DensityGrid(2, {0.1}, {1.0}), ValidationError);
  CHECK_THROWS_AS(DensityGrid(4, {1, 1, 1, 1}, {1.0}), ValidationError);
  CHECK_THROWS_AS(u_int_from_density(linear_density(10), 0), DomainError);
}

TEST_CASE("midpoint quadrature converges at second order") {
  // Exact value 13/12; midpoint error is -h^2/12 for this density.
  double prev_u = u_int_from_density(linear_density(16), 1);
  double prev_change = 0.0;
  for (int points = 32; points <= 1024; points *= 2) {
    const double u = u_int_from_density(linear_density(points), 1);
    const double change = std::abs(u - prev_u);
    CHECK(std::abs(u - 13.0 / 12.0) == doctest::Approx(1.0 / (12.0 * points * points)).epsilon(1e-6));
    if (prev_change > 0.0) {
      CHECK(change <= prev_change / 4 * (1 + 1e-6));
      CHECK(prev_change / change == doctest::Approx(4.0).epsilon(1e-6));
    }
    prev_change = change;
    prev_u = u;
  }
}

TEST_CASE("recoil gate") {
  CHECK(recoil_gate(1e6, 1e5).regime == Regime::individual);
  CHECK(recoil_gate(1e2, 1e5).regime == Regime::collective);
  CHECK(recoil_gate(3.0, 3.0).regime == Regime::collective);
  const auto v = recoil_gate(1e6, 1e5);
  CHECK(v.omega_r == 1e6);
  CHECK(v.u_int == 1e5);
  CHECK(to_string(v.regime) == "individual");
  CHECK_THROWS_AS(recoil_gate(-1.0, 1.0), DomainError);
}

TEST_CASE("property: the gate verdict is scale invariant") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> mag(-6.0, 6.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = std::pow(10.0, mag(gen));
    const double b = i % 10 == 0 ? a : std::pow(10.0, mag(gen));
    const auto base = recoil_gate(a, b).regime;
    for (double scale : {0x1p-40, 0.25, 2.0, 0x1p30}) {
      CHECK(recoil_gate(a * scale, b * scale).regime == base);
    }
    if (std::abs(a - b) > 1e-9 * std::max(a, b)) {
      const double c = std::pow(10.0, mag(gen));
      CHECK(recoil_gate(a * c, b * c).regime == base);
    }
  }
}

TEST_CASE("phonon dispersion") {
  CHECK(phonon_dispersion(1, 1, 0, 1) == 0.0);
  CHECK(phonon_dispersion(1, 1, std::numbers::pi, 1) == doctest::Approx(2.0).epsilon(1e-15));
  const double c = 3.0, m = 2.0, a = 0.5;
  const double k = 1e-3 / a;
  const double sound = std::sqrt(c / m) * k * a;
  CHECK(std::abs(phonon_dispersion(c, m, k, a) - sound) <= std::sqrt(c / m) * std::pow(k * a, 3));
  CHECK(std::abs(phonon_dispersion(c, m, k, a) - sound) > 0.0);

  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(0.0, 20.0);
  for (int i = 0; i < 500; ++i) {
    const double kk = u(gen);
    const double w = phonon_dispersion(c, m, kk, a);
    CHECK(w >= 0.0);
    CHECK(w == doctest::Approx(phonon_dispersion(c, m, kk + 2 * std::numbers::pi / a, a)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(phonon_dispersion(0, 1, 1, 1), DomainError);
  CHECK_THROWS_AS(phonon_dispersion(1, 1, -1, 1), DomainError);
}

TEST_CASE("density CSV reader") {
  SUBCASE("valid file with comments and ragged rows") {
    std::istringstream in("# box\n1,0.25\n1,1\n\n1,1\n");
    const auto g = read_density_csv(in);
    CHECK(g.dims() == 1);
    CHECK(g.values().size() == 4);
    CHECK(g.integral() == 1.0);
  }
  SUBCASE("2D header") {
    std::istringstream in("2,0.5,0.5\n1,1,1,1\n");
    const auto g = read_density_csv(in);
    CHECK(g.dims() == 2);
    CHECK(g.cell_volume() == 0.25);
  }
  SUBCASE("malformed number reports its line") {
    std::istringstream in("1,0.5\n1,1\n1,abc\n");
    try {
      read_density_csv(in);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("structural errors") {
    std::istringstream no_header("# nothing\n");
    CHECK_THROWS_AS(read_density_csv(no_header), ParseError);
    std::istringstream bad_dims("5,0.1\n1\n");
    CHECK_THROWS_AS(read_density_csv(bad_dims), ParseError);
    std::istringstream short_header("2,0.1\n1\n");
    CHECK_THROWS_AS(read_density_csv(short_header), ParseError);
    std::istringstream negative("1,0.5\n1,-1\n");
    CHECK_THROWS_AS(read_density_csv(negative), ParseError);
    std::istringstream empty_field("1,0.5\n1,,1\n");
    CHECK_THROWS_AS(read_density_csv(empty_field), ParseError);
  }
  SUBCASE("write then read preserves the grid") {
    const auto g = gaussian_1d(1.3, 777);
    std::stringstream buf;
    write_density_csv(buf, g, 10);
    const auto back = read_density_csv(buf);
    CHECK(back.spacings() == g.spacings());
    CHECK(back.values() == g.values());
  }
  CHECK_THROWS_AS(load_density_csv("/nonexistent/density.csv"), ValidationError);
}
