#pragma once

#include <optional>
#include <vector>

#include "snwalk/numeric.hpp"
#include "snwalk/partitions.hpp"
#include "snwalk/spectrum.hpp"
#include "snwalk/table_cache.hpp"
#include "snwalk/walk.hpp"

namespace snwalk {

/// Cut-off below which both Poisson tails are considered negligible.
inline constexpr double kPoissonTailTolerance = 1e-15;

/// Index J beyond which the tail masses of Poiss(a) and Poiss(b) are both
/// below `tolerance`.
int poisson_cutoff(double a, double b, double tolerance = kPoissonTailTolerance);
/// (1/2) sum_{j=0}^{terms-1} |Poiss(a)(j) - Poiss(b)(j)|.
double poisson_tv_partial(double a, double b, int terms);
/// ||Poiss(a) - Poiss(b)||_TV by direct summation up to poisson_cutoff.
/// Throws std::invalid_argument unless a, b > 0.
double poisson_tv(double a, double b);

/// ||Poiss(1 + e^{-2c}) - Poiss(1)||_TV.
double limiting_profile(double c);

/// Partitions of n with lambda_1 >= n - M. Requires 0 <= M < n.
std::vector<Partition> s_m_members(int n, int M);
/// |S_M| / p(n) = (p(0) + ... + p(M)) / p(n). Requires n > 2M.
Rational s_m_ratio(int n, int M);

/// Main term restricted to S_M:
/// (1 / (2 n!)) sum_mu |C_mu| |sum_{lambda in S_M, lambda != (n)} d s^k chi(mu)|.
double truncated_main_term(const ExactWalk& walk, int k, int M);
/// (1/2) sum_{lambda not in S_M, lambda != (n)} d |s|^k.
double truncation_error(const WalkSpectrum& spectrum, int k, int M);

struct ProfileRow {
  int n = 0;
  int k = 0;
  int M = 0;
  double tv_exact = 0.0;
  double main_term = 0.0;
  double truncation_error = 0.0;
  double poisson_limit = 0.0;
  double gap = 0.0;  // |tv_exact - poisson_limit|
};

struct ProfileReport {
  double c = 0.0;
  std::vector<ProfileRow> rows;
};

/// Width used when none is requested: the smallest M <= 8 with
/// truncation_error < 0.01, else the largest admissible M <= 8.
inline constexpr int kMaxAdaptiveM = 8;
inline constexpr double kAdaptiveTruncationTarget = 0.01;
int adaptive_m(const WalkSpectrum& spectrum, int k);

/// One row per n at k = steps_for(n, c). M is clamped to n - 1.
ProfileReport profile_report(double c, const std::vector<int>& n_values, std::optional<int> M,
                             TableStore& tables, unsigned threads = 0);

}  // namespace snwalk
