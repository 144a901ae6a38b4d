#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "snwalk/numeric.hpp"
#include "snwalk/partitions.hpp"

namespace snwalk {

/// Zones of the irreducibles by first row lambda_1 and number of rows m:
/// inner (A1) both <= n/3, outer (A3) either > n/2, mid (A2) otherwise.
enum class Zone { A1, A2, A3 };

std::string_view to_string(Zone zone);
/// Thresholds are compared exactly in integers (3 lambda_1 <= n, ...).
Zone zone_of(const Partition& lambda);

/// Exact eigenvalue of the walk on the isotypic component of lambda:
/// s = 1/n + ((n-1)/n) r(lambda) = (n + 2 content_sum(lambda)) / n^2.
Rational eigenvalue_exact(const Partition& lambda);
/// eigenvalue_exact rounded once to binary64. Requires n >= 2.
double eigenvalue(const Partition& lambda);

struct SpectrumEntry {
  Partition lambda;
  BigInt dim;
  Rational ratio;
  /// Integer numerator a of s = a / n^2.
  std::int64_t eigen_numerator = 0;
  double s = 0.0;
  Zone zone = Zone::A3;
};

/// Per-irreducible spectral data of the random-transposition walk on S_n,
/// in enumerate_partitions(n) order (entry 0 is the trivial representation).
struct WalkSpectrum {
  int n = 0;
  std::vector<SpectrumEntry> entries;

  /// n^2, the common eigenvalue denominator.
  std::int64_t eigen_denominator() const { return static_cast<std::int64_t>(n) * n; }
};

/// 2 <= n <= 40.
WalkSpectrum build_spectrum(int n, unsigned threads = 0);

/// Upper bound lemma sum (1/4) sum_{lambda != (n)} d^2 s^{2k}; the total
/// variation distance after k steps is at most its square root. Terms are
/// summed largest first with compensation.
double ubl_bound(const WalkSpectrum& spectrum, int k);
double ubl_bound(int n, int k);

/// sum over lambda in zone, lambda != (n), of d^2 s^{2k}.
double zone_sum(const WalkSpectrum& spectrum, int k, Zone zone);
double zone_sum(int n, int k, Zone zone);
std::size_t zone_members(const WalkSpectrum& spectrum, Zone zone);

/// True iff |s_lambda| < 1/3 for every lambda in the inner zone (vacuously
/// true when the zone is empty). Checked in exact arithmetic.
bool a1_eigen_check(int n);

/// Largest |s_lambda| over the nontrivial irreducibles, exact.
Rational max_nontrivial_eigenvalue(const WalkSpectrum& spectrum);

/// Closed-form per-zone bound expressions, evaluated in log space. They are
/// reported for diagnostics only; their constants are not validated here.
struct ZoneBoundExpressions {
  int n = 0;
  int k = 0;
  double c = 0.0;  // k/n - (1/2) log n
  double log_a1 = 0.0;
  double log_a2 = 0.0;
  double log_b1 = 0.0;
  double log_b2 = 0.0;
  double log_b3 = 0.0;

  double a1() const;
  double a2() const;
  double b1() const;
  double b2() const;
  double b3() const;
};

/// n >= 10, k >= 1. The constant c is the one realized by k.
ZoneBoundExpressions zone_bound_expressions(int n, int k);

/// floor((1/2) n log n + c n) with the natural logarithm.
int steps_for(int n, double c);

struct DsBoundReport {
  int n = 0;
  double c = 0.0;
  int k = 0;
  double c_realized = 0.0;  // k/n - (1/2) log n
  double ubl_sqrt = 0.0;
  double decay = 0.0;  // e^{-2c}
  double ratio = 0.0;  // ubl_sqrt / decay
};

/// n >= 4; throws std::invalid_argument if steps_for(n, c) < 1.
DsBoundReport ds_bound_report(const WalkSpectrum& spectrum, double c);
DsBoundReport ds_bound_report(int n, double c);

}  // namespace snwalk
