#include "snwalk/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "snwalk/parallel.hpp"

namespace snwalk {

namespace {

double log_poisson(double rate, int j) { return -rate + j * std::log(rate) - std::lgamma(j + 1.0); }

// Upper bound on P(Poiss(rate) >= j) for j > rate: geometric majorant of the
// ratio pmf(i+1)/pmf(i) = rate/(i+1).
double poisson_tail_bound(double rate, int j) {
  const double q = rate / (j + 1.0);
  return std::exp(log_poisson(rate, j)) / (1.0 - q);
}

bool in_s_m(const SpectrumEntry& e, int n, int M) { return e.lambda.first() >= n - M; }

}  // namespace

int poisson_cutoff(double a, double b, double tolerance) {
  const double top = std::max(a, b);
  int j = static_cast<int>(std::ceil(top)) + 1;
  while (poisson_tail_bound(a, j) >= tolerance || poisson_tail_bound(b, j) >= tolerance) ++j;
  return j;
}

double poisson_tv_partial(double a, double b, int terms) {
  KahanSum acc;
  for (int j = 0; j < terms; ++j) {
    acc.add(std::abs(std::exp(log_poisson(a, j)) - std::exp(log_poisson(b, j))));
  }
  return 0.5 * acc.value();
}

double poisson_tv(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("poisson_tv: parameters must be positive");
  return poisson_tv_partial(a, b, poisson_cutoff(a, b));
}

double limiting_profile(double c) { return poisson_tv(1.0 + std::exp(-2.0 * c), 1.0); }

std::vector<Partition> s_m_members(int n, int M) {
  if (M < 0 || M >= n) throw std::invalid_argument("s_m_members: need 0 <= M < n");
  std::vector<Partition> out;
  for (Partition& p : enumerate_partitions(n)) {
    if (p.first() >= n - M) out.push_back(std::move(p));
  }
  return out;
}

Rational s_m_ratio(int n, int M) {
  if (M < 0) throw std::invalid_argument("s_m_ratio: M must be >= 0");
  if (n <= 2 * M) {
    throw std::invalid_argument("s_m_ratio: the count formula needs n > 2M (n = " + std::to_string(n) +
                                ", M = " + std::to_string(M) + ")");
  }
  const auto p = partition_counts(n);
  BigInt members = 0;
  for (int j = 0; j <= M; ++j) members += p[static_cast<std::size_t>(j)];
  return Rational(members, p.back());
}

double truncated_main_term(const ExactWalk& walk, int k, int M) {
  const int n = walk.n();
  if (M < 0 || M >= n) throw std::invalid_argument("truncated_main_term: need 0 <= M < n");
  return walk.restricted_l1(k, [n, M](const SpectrumEntry& e) { return in_s_m(e, n, M); });
}

double truncation_error(const WalkSpectrum& spectrum, int k, int M) {
  const int n = spectrum.n;
  if (M < 0 || M >= n) throw std::invalid_argument("truncation_error: need 0 <= M < n");
  if (k < 0) throw std::invalid_argument("truncation_error: k must be >= 0");
  std::vector<double> terms;
  for (std::size_t i = 1; i < spectrum.entries.size(); ++i) {
    const SpectrumEntry& e = spectrum.entries[i];
    if (in_s_m(e, n, M)) continue;
    const double d = e.dim.convert_to<double>();
    if (k == 0) {
      terms.push_back(d);
    } else if (e.eigen_numerator != 0) {
      terms.push_back(std::exp(std::log(d) + k * std::log(std::abs(e.s))));
    }
  }
  std::sort(terms.begin(), terms.end(), std::greater<>());
  KahanSum acc;
  for (double t : terms) acc.add(t);
  return 0.5 * acc.value();
}

int adaptive_m(const WalkSpectrum& spectrum, int k) {
  const int limit = std::min(kMaxAdaptiveM, spectrum.n - 1);
  for (int M = 0; M <= limit; ++M) {
    if (truncation_error(spectrum, k, M) < kAdaptiveTruncationTarget) return M;
  }
  return limit;
}

ProfileReport profile_report(double c, const std::vector<int>& n_values, std::optional<int> M,
                             TableStore& tables, unsigned threads) {
  if (M && *M < 0) throw std::invalid_argument("profile_report: M must be >= 0");
  for (int n : n_values) {
    if (n < 4 || n > kMaxExactN) {
      throw std::invalid_argument("profile_report: n must lie in [4, " + std::to_string(kMaxExactN) + "]");
    }
    if (steps_for(n, c) < 1) {
      throw std::invalid_argument("profile_report: k < 1 for n = " + std::to_string(n));
    }
  }
  ProfileReport report;
  report.c = c;
  report.rows.resize(n_values.size());
  const double limit = limiting_profile(c);
  // Rows share the worker budget; each row's inner sums run single-threaded
  // when there are several rows.
  const unsigned inner = n_values.size() > 1 ? 1u : threads;
  parallel_for(n_values.size(), threads, [&](std::size_t i) {
    const int n = n_values[i];
    const ExactWalk walk(tables.get(n), inner);
    ProfileRow& row = report.rows[i];
    row.n = n;
    row.k = steps_for(n, c);
    row.M = M ? std::min(*M, n - 1) : adaptive_m(walk.spectrum(), row.k);
    row.tv_exact = walk.tv_to_uniform(row.k);
    row.main_term = truncated_main_term(walk, row.k, row.M);
    row.truncation_error = truncation_error(walk.spectrum(), row.k, row.M);
    row.poisson_limit = limit;
    row.gap = std::abs(row.tv_exact - limit);
  });
  return report;
}

}  // namespace snwalk
