// Acceptance suite: one line per criterion, nonzero exit if any gated
// criterion fails. Tolerances are fixed constants below.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "oracles.hpp"
#include "snwalk/characters.hpp"
#include "snwalk/io.hpp"
#include "snwalk/partitions.hpp"
#include "snwalk/profile.hpp"
#include "snwalk/spectrum.hpp"
#include "snwalk/walk.hpp"

using namespace snwalk;

namespace {

constexpr double kOracleTolerance = 1e-10;
constexpr double kTruncationSlack = 1e-9;
constexpr double kFullTruncationTolerance = 1e-10;
constexpr double kTailDoublingTolerance = 1e-12;
constexpr double kDecayCap = 10.0;
constexpr double kMonteCarloTolerance = 0.01;
constexpr double kTable20Seconds = 60.0;
constexpr double kTable25Seconds = 900.0;

struct Outcome {
  bool pass = false;
  std::string detail;
  bool gated = true;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::shared_ptr<const CharacterTable> table(int n) {
  return std::make_shared<const CharacterTable>(build_table(n));
}

Outcome exact_identities() {
  const auto start = Clock::now();
  for (int n = 1; n <= 25; ++n) {
    const BigInt order = factorial(n);
    BigInt dims{0};
    BigInt classes{0};
    for (const auto& p : enumerate_partitions(n)) {
      const BigInt d = dimension(p);
      dims += d * d;
      classes += class_size(p);
    }
    if (dims != order) return {false, fmt::format("sum of d^2 != n! at n={}", n)};
    if (classes != order) return {false, fmt::format("sum of class sizes != n! at n={}", n)};
  }
  const double t = seconds_since(start);
  return {t < 10.0, fmt::format("n=1..25 exact, {:.2f} s", t)};
}

Outcome table_correctness() {
  for (int n = 1; n <= 10; ++n) {
    const auto t = build_table(n);
    const std::size_t p = t.size();
    const BigInt order = factorial(n);
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t b = a; b < p; ++b) {
        BigInt rows{0};
        BigInt cols{0};
        for (std::size_t j = 0; j < p; ++j) {
          rows += t.class_sizes()[j] * BigInt(t.at(a, j)) * BigInt(t.at(b, j));
          cols += BigInt(t.at(j, a)) * BigInt(t.at(j, b));
        }
        const BigInt want_rows = a == b ? order : BigInt(0);
        const BigInt want_cols = a == b ? centralizer_order(t.partition(a)) : BigInt(0);
        if (rows != want_rows) return {false, fmt::format("row orthogonality fails at n={} ({},{})", n, a, b)};
        if (cols != want_cols) return {false, fmt::format("column orthogonality fails at n={} ({},{})", n, a, b)};
      }
    }
  }
  for (int n = 1; n <= 20; ++n) {
    const auto t = build_table(n);
    const std::size_t id = t.index().identity_index();
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (BigInt(t.at(i, id)) != dimension(t.partition(i)))
        return {false, fmt::format("chi(id) != d at n={} lambda={}", n, t.partition(i).to_string())};
      if (n <= 14 && BigInt(t.at(i, id)) != oracle::count_syt(std::vector<int>(t.partition(i).parts().begin(),
                                                                               t.partition(i).parts().end())))
        return {false, fmt::format("chi(id) != #SYT at n={}", n)};
    }
  }
  return {true, "orthogonality exact n<=10; chi(id)=d n<=20"};
}

Outcome ratio_agreement() {
  std::size_t checked = 0;
  for (int n = 2; n <= 12; ++n) {
    MurnaghanNakayama mn;
    const Partition tau = Partition::transposition(n);
    for (const auto& lambda : enumerate_partitions(n)) {
      const Rational by_contents = character_ratio(lambda);
      const Rational by_rows = character_ratio_by_rows(lambda);
      const Rational by_mn = Rational(BigInt(mn(lambda, tau))) / Rational(dimension(lambda));
      if (by_contents != by_rows || by_rows != by_mn)
        return {false, fmt::format("disagreement at {}", lambda.to_string())};
      if (character_ratio(transpose(lambda)) != -by_contents)
        return {false, fmt::format("r(lambda') != -r(lambda) at {}", lambda.to_string())};
      ++checked;
    }
    if (character_ratio(Partition::row(n)) != Rational(1) || character_ratio(Partition::column(n)) != Rational(-1))
      return {false, fmt::format("row/column ratio wrong at n={}", n)};
  }
  return {true, fmt::format("{} partitions, three routes agree exactly", checked)};
}

Outcome monotonicity() {
  std::size_t pairs = 0;
  std::size_t violations = 0;
  for (int n = 1; n <= 12; ++n) {
    const auto parts = enumerate_partitions(n);
    std::vector<Rational> r;
    for (const auto& p : parts) r.push_back(n >= 2 ? character_ratio(p) : Rational(1));
    for (std::size_t a = 0; a < parts.size(); ++a) {
      for (std::size_t b = 0; b < parts.size(); ++b) {
        if (a == b || !dominates(parts[a], parts[b])) continue;
        ++pairs;
        if (r[a] < r[b]) ++violations;
      }
    }
  }
  return {violations == 0, fmt::format("{} comparable pairs, {} violations", pairs, violations)};
}

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (int n = 3; n <= 7; ++n) {
    const auto t = table(n);
    const ExactWalk walk(t);
    const ClassDistribution step = walk_measure(n);
    ClassDistribution current = identity_distribution(n);
    for (int k = 0; k <= 10; ++k) {
      if (k > 0) current = convolve_oracle(current, step);
      const auto exact = walk.class_masses(k);
      for (std::size_t i = 0; i < exact.size(); ++i)
        worst = std::max(worst, std::abs(current.class_mass(i) - to_double(exact[i])));
    }
  }
  const double t = seconds_since(start);
  return {worst <= kOracleTolerance && t < 120.0, fmt::format("max class-mass error {:.3g}, {:.2f} s", worst, t)};
}

Outcome upper_bound_chain() {
  double worst_tv_ratio = 0.0;
  for (int n = 4; n <= 20; ++n) {
    const ExactWalk walk(table(n));
    for (int k = 1; k <= 3 * n; ++k) {
      const double tv = walk.tv_to_uniform(k);
      const double bound = std::sqrt(ubl_bound(walk.spectrum(), k));
      if (tv > bound) return {false, fmt::format("tv {} > sqrt(ubl) {} at n={} k={}", tv, bound, n, k)};
      if (bound > 0) worst_tv_ratio = std::max(worst_tv_ratio, tv / bound);
    }
  }
  double worst_decay_ratio = 0.0;
  std::string where;
  for (int n = 10; n <= 20; ++n) {
    const auto spectrum = build_spectrum(n);
    for (double c : {0.0, 0.5, 1.0, 2.0}) {
      const auto report = ds_bound_report(spectrum, c);
      if (report.ratio > worst_decay_ratio) {
        worst_decay_ratio = report.ratio;
        where = fmt::format("n={} c={}", n, c);
      }
    }
  }
  return {worst_decay_ratio <= kDecayCap,
          fmt::format("max tv/sqrt(ubl) {:.4f}; max sqrt(ubl)/e^(-2c) {:.4f} at {} (cap {})", worst_tv_ratio,
                      worst_decay_ratio, where, kDecayCap)};
}

Outcome inner_zone() {
  std::size_t members = 0;
  double worst = 0.0;
  for (int n = 10; n <= 25; ++n) {
    if (!a1_eigen_check(n)) return {false, fmt::format("inner-zone eigenvalue >= 1/3 at n={}", n)};
    const auto spectrum = build_spectrum(n);
    members += zone_members(spectrum, Zone::A1);
    const double order = to_double(factorial(n), BigInt(1));
    for (int k = 1; k <= 3 * n; ++k) {
      const double sum = zone_sum(spectrum, k, Zone::A1);
      const double bound = std::pow(1.0 / 3.0, 2 * k) * order;
      if (!(sum < bound)) return {false, fmt::format("zone sum {} >= {} at n={} k={}", sum, bound, n, k)};
      worst = std::max(worst, sum / bound);
    }
  }
  return {true, fmt::format("{} inner-zone irreducibles over n=10..25; max sum/bound {:.3g}", members, worst)};
}

Outcome truncation_inequality() {
  double worst_excess = -1.0;
  double worst_full = 0.0;
  std::size_t cases = 0;
  for (int n = 2; n <= 20; ++n) {
    const ExactWalk walk(table(n));
    for (int k = 1; k <= 3 * n; ++k) {
      const double tv = walk.tv_to_uniform(k);
      for (int M = 0; M <= 6 && M < n; ++M) {
        const double diff = std::abs(tv - truncated_main_term(walk, k, M));
        const double err = truncation_error(walk.spectrum(), k, M);
        worst_excess = std::max(worst_excess, diff - err);
        ++cases;
        if (diff > err + kTruncationSlack)
          return {false, fmt::format("|tv - main| {} > err {} at n={} k={} M={}", diff, err, n, k, M)};
      }
      worst_full = std::max(worst_full, std::abs(tv - truncated_main_term(walk, k, n - 1)));
    }
  }
  return {worst_full <= kFullTruncationTolerance,
          fmt::format("{} cases, max (diff - err) {:.3g}; M=n-1 max deviation {:.3g}", cases, worst_excess,
                      worst_full)};
}

Outcome convergence() {
  std::string detail;
  bool pass = true;
  for (double c : {0.0, 0.5, 1.0}) {
    const double limit = limiting_profile(c);
    double gaps[2];
    int slot = 0;
    for (int n : {10, 20}) {
      const ExactWalk walk(table(n));
      gaps[slot++] = std::abs(walk.tv_to_uniform(steps_for(n, c)) - limit);
    }
    pass = pass && gaps[1] < gaps[0];
    detail += fmt::format("c={}: gap10={:.4f} gap20={:.4f}; ", c, gaps[0], gaps[1]);
  }
  double worst_tail = 0.0;
  for (double c = -1.0; c <= 3.0; c += 0.25) {
    const double a = 1.0 + std::exp(-2.0 * c);
    const int terms = poisson_cutoff(a, 1.0);
    const double once = poisson_tv_partial(a, 1.0, terms);
    const double twice = poisson_tv_partial(a, 1.0, 2 * terms);
    const double series = static_cast<double>(oracle::poisson_tv_series(a, 1.0L, 2 * terms));
    worst_tail = std::max({worst_tail, std::abs(once - twice), std::abs(limiting_profile(c) - series)});
  }
  pass = pass && worst_tail < kTailDoublingTolerance;
  detail += fmt::format("tail-doubling deviation {:.3g}", worst_tail);
  return {pass, detail};
}

Outcome s_m_density() {
  const Rational at30 = s_m_ratio(30, 3);
  bool pass = at30 == make_rational(7, 5604) && at30 <= make_rational(9, 5604);
  Rational previous{2};
  for (int n : {20, 25, 30, 35, 40}) {
    const Rational r = s_m_ratio(n, 3);
    pass = pass && r < previous;
    previous = r;
  }
  return {pass, fmt::format("|S_3|/p(30) = {}; strictly decreasing over n=20..40", at30.str())};
}

std::string empirical_csv(const EmpiricalDistribution& e, const std::vector<double>& exact) {
  std::ostringstream out;
  write_csv(out, empirical_table(e, exact));
  return out.str();
}

Outcome monte_carlo() {
  constexpr int n = 5;
  constexpr int k = 8;
  constexpr std::uint64_t trials = 200'000;
  constexpr std::uint64_t seed = 20240607;
  const ExactWalk walk(table(n));
  const ClassDistribution exact = walk.distribution(k);
  std::vector<double> exact_mass;
  for (std::size_t i = 0; i < exact.probs.size(); ++i) exact_mass.push_back(exact.class_mass(i));
  const auto first = simulate_shuffle(n, k, trials, seed, 1);
  const auto second = simulate_shuffle(n, k, trials, seed, 4);
  const double tv = tv_distance(first.dist, exact);
  const bool identical = empirical_csv(first, exact_mass) == empirical_csv(second, exact_mass);
  return {tv < kMonteCarloTolerance && identical,
          fmt::format("empirical TV {:.5f}; rerun byte-identical: {}", tv, identical ? "yes" : "no")};
}

Outcome performance() {
  auto start = Clock::now();
  const auto t20 = build_table(20);
  const auto s20 = build_spectrum(20);
  const double secs20 = seconds_since(start);
  start = Clock::now();
  const auto t25 = build_table(25);
  const auto s25 = build_spectrum(25);
  const double secs25 = seconds_since(start);
  const bool ok20 = secs20 < kTable20Seconds && t20.size() == s20.entries.size();
  return {ok20, fmt::format("n=20: {:.3f} s (limit {} s); n=25: {:.3f} s ({}, not gated)", secs20, kTable20Seconds,
                            secs25, secs25 < kTable25Seconds && t25.size() == s25.entries.size() ? "ok" : "slow")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "exact identities", exact_identities},
      {2, "character table correctness", table_correctness},
      {3, "character ratio agreement", ratio_agreement},
      {4, "dominance monotonicity", monotonicity},
      {5, "oracle equivalence", oracle_equivalence},
      {6, "upper bound chain", upper_bound_chain},
      {7, "inner zone", inner_zone},
      {8, "truncation inequality", truncation_inequality},
      {9, "convergence to limiting profile", convergence},
      {10, "small-first-row density", s_m_density},
      {11, "monte carlo sanity", monte_carlo},
      {12, "performance", performance},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome outcome;
    const auto start = Clock::now();
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass && outcome.gated) ++failures;
    std::cout << fmt::format("[{}] {:>2} {} -- {} ({:.2f} s)", outcome.pass ? "PASS" : "FAIL", c.id, c.name,
                             outcome.detail, seconds_since(start))
              << std::endl;
  }
  std::cout << fmt::format("{} of {} criteria passed", criteria.size() - failures, criteria.size()) << std::endl;
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
