#include <doctest.h>

#include <cmath>

#include "symwork/errors.hpp"
#include "symwork/work.hpp"

using namespace symwork;

namespace {
constexpr double kX10 = 4.53999297624848515e-05;
// Exact entropy at beta_tilde = 10 divided by beta_tilde (30-digit reference).
constexpr double kWExact10 = 4.99377586241208592e-05;
}  // namespace

TEST_CASE("rethermalize returns the thermal ladder of the remainder") {
  const auto rho = rethermalize(7, {10.0, 1.0, 1});
  CHECK(rho.n_particles() == 7);
  CHECK(rho.weight(1) / rho.weight(0) == doctest::Approx(kX10).epsilon(1e-13));
  const auto frozen = rethermalize(7, {1000.0, 1.0, 1});
  CHECK(frozen.weight(0) == 1.0);
  CHECK(von_neumann_entropy(frozen) == 0.0);
}

TEST_CASE("extract_work") {
  const ThermalParams p{10.0, 1.0, 1};
  CHECK(extract_work(kX10 * 10.0, 0.0, p) == doctest::Approx(kX10).epsilon(1e-15));
  const double s_exact = von_neumann_entropy(rethermalize(5, p));
  CHECK(extract_work(s_exact, 0.0, p) == doctest::Approx(kWExact10).epsilon(1e-12));
  CHECK(extract_work(0.3, 0.3, p) == 0.0);
  CHECK(extract_work(0.1, 0.3, p) < 0.0);
  CHECK(extract_work(1.0, 0.0, {10.0, 3.0, 1}) == doctest::Approx(0.3));
  CHECK_THROWS_AS(extract_work(1.0, 0.0, {0.0, 1.0, 1}), DomainError);
}

TEST_CASE("one post-selected cycle on a large condensate") {
  const ThermalParams p{10.0, 1.0, 1};
  const auto ledger = run_cycles(1'000'000, p, 1, 0, true);
  REQUIRE(ledger.entries.size() == 1);
  const auto& e = ledger.entries[0];
  CHECK(e.outcome == Outcome::excited);
  CHECK(e.n_before == 1'000'000);
  CHECK(e.n_after == 999'999);
  CHECK(e.s_meas == 0.0);
  CHECK(e.work_extracted == doctest::Approx(kWExact10).epsilon(1e-12));
  CHECK(e.energy_removed_by_recoil == 1.0);
  CHECK(e.finite_size_correction == 0.0);
  // Remainder collapses to the ground state then refills to x/(1+x) quanta.
  CHECK(e.internal_energy_change == doctest::Approx(kX10 / (1 + kX10)).epsilon(1e-13));
  CHECK(std::abs(e.heat_from_bath - (e.work_extracted + e.internal_energy_change)) < 1e-12);
}

TEST_CASE("post-selected cycles repeat the same work") {
  const ThermalParams p{10.0, 1.0, 1};
  const std::int64_t n = 1'000'000;
  const auto ledger = run_cycles(n, p, 3, 0, true);
  REQUIRE(ledger.entries.size() == 3);
  const double w1 = run_cycles(n, p, 1, 0, true).entries[0].work_extracted;
  CHECK(std::abs(ledger.cumulative_work() - 3 * w1) <= 3.0 / n * 3 * w1);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(ledger.entries[i].n_before == n - static_cast<std::int64_t>(i));
    CHECK(ledger.entries[i].energy_removed_by_recoil == 1.0);
  }
}

TEST_CASE("sampled single cycles hit e at the measurement probability") {
  const ThermalParams p{1.0, 1.0, 1};
  const std::int64_t n_before = 4;
  const double x = occupation_x(p).x;
  const double p_e = x / ((1 + x) * static_cast<double>(n_before));
  const int trials = 1'000'000;
  int hits = 0;
  for (int s = 0; s < trials; ++s) {
    hits += run_cycles(n_before, p, 1, static_cast<std::uint64_t>(s), false).entries[0].outcome == Outcome::excited;
  }
  const double sigma = std::sqrt(p_e * (1 - p_e) / trials);
  CHECK(std::abs(hits / static_cast<double>(trials) - p_e) < 3 * sigma);
}

TEST_CASE("run_cycles bounds and degenerate cases") {
  const ThermalParams p{10.0, 1.0, 1};
  CHECK_THROWS_AS(run_cycles(3, p, 3, 0, true), CapacityError);
  CHECK_THROWS_AS(run_cycles(1, p, 0, 0, true), CapacityError);
  CHECK(run_cycles(3, p, 2, 0, true).entries.back().n_after == 1);
  CHECK(run_cycles(100, p, 0, 0, false).entries.empty());
  CHECK_THROWS_AS(run_cycles(10, {1000.0, 1.0, 1}, 1, 0, true), DomainError);
}

TEST_CASE("sampled ledgers are reproducible and balanced") {
  const ThermalParams p{0.7, 2.0, 3};
  const auto a = run_cycles(40, p, 30, 77, false);
  const auto b = run_cycles(40, p, 30, 77, false);
  REQUIRE(a.entries.size() == 30);
  int excited = 0;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const auto& e = a.entries[i];
    CHECK(e.outcome == b.entries[i].outcome);
    CHECK(e.work_extracted == b.entries[i].work_extracted);
    CHECK(std::abs(e.heat_from_bath - e.work_extracted - e.internal_energy_change) <= 1e-12);
    CHECK(e.energy_removed_by_recoil == (e.outcome == Outcome::excited ? 2.0 : 0.0));
    excited += e.outcome == Outcome::excited;
  }
  CHECK(excited > 0);
  CHECK(excited < 30);
  CHECK_NOTHROW(a.check_invariants());
}

TEST_CASE("check_invariants catches a broken first-law entry") {
  auto ledger = run_cycles(10, {5.0, 1.0, 1}, 2, 0, true);
  ledger.entries[1].heat_from_bath += 1e-9;
  CHECK_THROWS_AS(ledger.check_invariants(), InvariantError);
}

TEST_CASE("finite-size corrections") {
  // k_max = 1: the e branch is pure for every N, nothing to correct.
  for (const auto& e : run_cycles(50, {3.0, 1.0, 1}, 10, 0, true).entries) {
    CHECK(e.finite_size_correction == 0.0);
  }
  // Deep ladder on a tiny condensate: truncation at n shows up explicitly.
  const auto small = run_cycles(4, {0.5, 1.0, 4}, 3, 0, true);
  CHECK(small.entries.back().finite_size_correction != 0.0);
  const auto big = run_cycles(1000, {0.5, 1.0, 4}, 3, 0, true);
  CHECK(std::abs(big.entries.back().finite_size_correction) < 1e-15);
}

TEST_CASE("eiwe_work") {
  CHECK(eiwe_work({1.0, 0.3, 2.0}) == 0.6);
  CHECK(eiwe_work({0.0, 0.3, 2.0}) == 0.0);
  CHECK(eiwe_work({1.0, photon_nbar(10.0), 1.0}) == doctest::Approx(4.54019910097e-5).epsilon(1e-11));
  CHECK_THROWS_AS(eiwe_work({1.2, 0.3, 1.0}), DomainError);
  CHECK_THROWS_AS(eiwe_work({0.5, -0.1, 1.0}), DomainError);
}

TEST_CASE("two-mode Bell case") {
  const ThermalParams p10{10.0, 1.0, 1};
  CHECK(two_mode_bell_work(p10) == doctest::Approx(kWExact10).epsilon(1e-12));
  CHECK(two_mode_bell_work(p10) == condensate_work(1'000'000, p10));
  CHECK(two_mode_bell_work(p10) == run_cycles(2, p10, 1, 0, true).entries[0].work_extracted);

  const ThermalParams p20{20.0, 1.0, 1};
  const double x20 = occupation_x(p20).x;
  CHECK(std::abs(two_mode_bell_work(p20) - x20) / x20 < 0.05);
}

TEST_CASE("property: exact work does not depend on N") {
  const ThermalParams p{9.0, 1.0, 1};
  const double w2 = condensate_work(2, p);
  for (std::int64_t n : {3LL, 4LL, 10LL, 137LL, 1000LL, 1'000'000LL, 1'000'000'000LL}) {
    CHECK(condensate_work(n, p) == w2);
  }
}

TEST_CASE("property: low-temperature convergence and monotonicity") {
  for (double beta = 8.0; beta <= 40.0; beta += 0.5) {
    const ThermalParams p{beta, 1.0, 1};
    const double x = occupation_x(p).x;
    CHECK(std::abs(condensate_work(100, p) - x) / x <= 1.5 / beta);
  }
  double prev = condensate_work(100, {1.0, 1.0, 1});
  for (double beta = 1.25; beta <= 40.0; beta += 0.25) {
    const double w = condensate_work(100, {beta, 1.0, 1});
    CHECK(w < prev);
    prev = w;
  }
}
