#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "snwalk/profile.hpp"

using snwalk::BigInt;
using snwalk::Partition;
using snwalk::Rational;

TEST_CASE("Poisson total variation") {
  CHECK(snwalk::poisson_tv(1.5, 1.5) == 0.0);
  const double v = snwalk::poisson_tv(2.0, 1.0);
  CHECK(v > 0.0);
  CHECK(v < 1.0);
  CHECK(v == doctest::Approx(static_cast<double>(oracle::poisson_tv_series(2.0L, 1.0L, 80))).epsilon(1e-13));
  CHECK(std::abs(snwalk::poisson_tv(1.0, 3.0) - snwalk::poisson_tv(3.0, 1.0)) < 1e-14);
  CHECK_THROWS_AS(snwalk::poisson_tv(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(snwalk::poisson_tv(1.0, -2.0), std::invalid_argument);
  for (double a : {0.3, 1.0, 2.0, 4.5, 9.0}) {
    const int j = snwalk::poisson_cutoff(a, 1.0);
    CHECK(std::abs(snwalk::poisson_tv_partial(a, 1.0, 2 * j) - snwalk::poisson_tv_partial(a, 1.0, j)) < 1e-12);
  }
}

TEST_CASE("limiting profile") {
  CHECK(snwalk::limiting_profile(20.0) < 1e-8);
  CHECK(snwalk::limiting_profile(0.0) == snwalk::poisson_tv(2.0, 1.0));
  const std::vector<double> grid{-1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double f = snwalk::limiting_profile(grid[i]);
    CHECK(f > 0.0);
    CHECK(f < 1.0);
    if (i) CHECK(f < snwalk::limiting_profile(grid[i - 1]));
  }
  CHECK(snwalk::limiting_profile(-4.0) > 0.99);
}

TEST_CASE("S_M members") {
  CHECK(snwalk::s_m_members(9, 0) == std::vector<Partition>{Partition::row(9)});
  CHECK(snwalk::s_m_members(20, 2).size() == 4);
  const auto m3 = snwalk::s_m_members(20, 3);
  for (const auto& want : {Partition({17, 3}), Partition({17, 2, 1}), Partition({17, 1, 1, 1})}) {
    CHECK(std::find(m3.begin(), m3.end(), want) != m3.end());
  }
  for (int n = 5; n <= 30; ++n) {
    for (int M = 0; 2 * M < n; ++M) {
      CHECK(Rational(BigInt(snwalk::s_m_members(n, M).size()), snwalk::partition_count(n)) == snwalk::s_m_ratio(n, M));
    }
  }
  CHECK_THROWS_AS(snwalk::s_m_members(5, 5), std::invalid_argument);
}

TEST_CASE("S_M ratio") {
  CHECK(snwalk::s_m_ratio(30, 3) == Rational(7, 5604));
  CHECK(snwalk::s_m_ratio(30, 3) <= Rational(9, 5604));
  CHECK(snwalk::s_m_ratio(40, 3) < snwalk::s_m_ratio(30, 3));
  // The M p(M) majorant needs M >= 2: for M = 1 it reads 2 <= 1.
  for (int M = 2; M <= 6; ++M) {
    for (int n = 2 * M + 1; n <= 60; ++n) {
      const Rational bound(BigInt(M) * snwalk::partition_count(M), snwalk::partition_count(n));
      CHECK(snwalk::s_m_ratio(n, M) <= bound);
      if (n > 2 * M + 1) CHECK(snwalk::s_m_ratio(n, M) < snwalk::s_m_ratio(n - 1, M));
    }
  }
  CHECK_THROWS_AS(snwalk::s_m_ratio(6, 3), std::invalid_argument);
}

TEST_CASE("truncated main term and truncation error") {
  const auto table = std::make_shared<const snwalk::CharacterTable>(snwalk::build_table(12));
  const snwalk::ExactWalk walk(table);
  const int k = snwalk::steps_for(12, 0.0);
  CHECK(snwalk::truncated_main_term(walk, k, 0) == 0.0);
  CHECK(snwalk::truncation_error(walk.spectrum(), k, 11) == 0.0);
  CHECK(std::abs(snwalk::truncated_main_term(walk, k, 11) - walk.tv_to_uniform(k)) < 1e-10);
  CHECK(snwalk::truncation_error(walk.spectrum(), k, 2) >= snwalk::truncation_error(walk.spectrum(), k, 4));
  for (int M = 0; M <= 6; ++M) {
    for (int kk = k - 5; kk <= k + 5; ++kk) {
      const double gap = std::abs(walk.tv_to_uniform(kk) - snwalk::truncated_main_term(walk, kk, M));
      CHECK(gap <= snwalk::truncation_error(walk.spectrum(), kk, M) + 1e-9);
      CHECK(snwalk::truncation_error(walk.spectrum(), kk + 1, M) <= snwalk::truncation_error(walk.spectrum(), kk, M));
    }
  }
}

TEST_CASE("truncation error shrinks with n at fixed c and M") {
  double prev = INFINITY;
  for (int n : {10, 12, 15}) {
    const auto spectrum = snwalk::build_spectrum(n);
    const double err = snwalk::truncation_error(spectrum, snwalk::steps_for(n, 0.5), 5);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("profile report") {
  snwalk::TableStore store;
  const auto report = snwalk::profile_report(0.0, {8, 12, 16, 20}, 4, store);
  REQUIRE(report.rows.size() == 4);
  for (const auto& row : report.rows) {
    CHECK(row.poisson_limit == report.rows.front().poisson_limit);
    CHECK(std::abs(row.tv_exact - row.main_term) <= row.truncation_error + 1e-9);
    CHECK(row.M == 4);
  }
  CHECK(report.rows.back().gap < report.rows.front().gap);

  const auto adaptive = snwalk::profile_report(1.0, {12}, std::nullopt, store);
  CHECK(adaptive.rows[0].M <= snwalk::kMaxAdaptiveM);
  CHECK_THROWS_AS(snwalk::profile_report(0.0, {26}, 2, store), std::invalid_argument);
}
