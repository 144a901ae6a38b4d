#include "snwalk/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "snwalk/characters.hpp"
#include "snwalk/parallel.hpp"

namespace snwalk {

namespace {

void require_walk_size(int n) {
  if (n < 2) throw std::invalid_argument("the transposition walk needs n >= 2");
}

double log_sum_exp(const std::vector<double>& logs) {
  if (logs.empty()) return -INFINITY;
  const double top = *std::max_element(logs.begin(), logs.end());
  if (!std::isfinite(top)) return top;
  KahanSum acc;
  for (double v : logs) acc.add(std::exp(v - top));
  return top + std::log(acc.value());
}

double sum_descending(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end(), std::greater<>());
  KahanSum acc;
  for (double t : terms) acc.add(t);
  return acc.value();
}

// d^2 s^{2k}, formed in log space so tiny s^{2k} does not underflow before
// the large d^2 factor is applied.
double weighted_power(const SpectrumEntry& e, int k) {
  if (k == 0) return e.dim.convert_to<double>() * e.dim.convert_to<double>();
  if (e.eigen_numerator == 0) return 0.0;
  const double log_d = std::log(e.dim.convert_to<double>());
  return std::exp(2.0 * log_d + 2.0 * k * std::log(std::abs(e.s)));
}

}  // namespace

std::string_view to_string(Zone zone) {
  switch (zone) {
    case Zone::A1: return "A1";
    case Zone::A2: return "A2";
    case Zone::A3: return "A3";
  }
  return "?";
}

Zone zone_of(const Partition& lambda) {
  const int n = lambda.size();
  const int first = lambda.first();
  const int rows = lambda.length();
  if (3 * first <= n && 3 * rows <= n) return Zone::A1;
  if (2 * first > n || 2 * rows > n) return Zone::A3;
  return Zone::A2;
}

Rational eigenvalue_exact(const Partition& lambda) {
  require_walk_size(lambda.size());
  const std::int64_t n = lambda.size();
  return make_rational(n + 2 * content_sum(lambda), n * n);
}

double eigenvalue(const Partition& lambda) { return to_double(eigenvalue_exact(lambda)); }

WalkSpectrum build_spectrum(int n, unsigned threads) {
  require_walk_size(n);
  WalkSpectrum spectrum;
  spectrum.n = n;
  const auto parts = enumerate_partitions(n);
  spectrum.entries.resize(parts.size());
  const std::int64_t denom = static_cast<std::int64_t>(n) * n;
  parallel_for(parts.size(), threads, [&](std::size_t i) {
    SpectrumEntry& e = spectrum.entries[i];
    e.lambda = parts[i];
    e.dim = dimension(e.lambda);
    e.ratio = character_ratio(e.lambda);
    e.eigen_numerator = n + 2 * content_sum(e.lambda);
    e.s = to_double(make_rational(e.eigen_numerator, denom));
    e.zone = zone_of(e.lambda);
  });
  return spectrum;
}

double ubl_bound(const WalkSpectrum& spectrum, int k) {
  if (k < 0) throw std::invalid_argument("ubl_bound: k must be >= 0");
  std::vector<double> terms;
  terms.reserve(spectrum.entries.size());
  for (std::size_t i = 1; i < spectrum.entries.size(); ++i) {
    terms.push_back(weighted_power(spectrum.entries[i], k));
  }
  return 0.25 * sum_descending(std::move(terms));
}

double ubl_bound(int n, int k) { return ubl_bound(build_spectrum(n), k); }

double zone_sum(const WalkSpectrum& spectrum, int k, Zone zone) {
  if (k < 0) throw std::invalid_argument("zone_sum: k must be >= 0");
  std::vector<double> terms;
  for (std::size_t i = 1; i < spectrum.entries.size(); ++i) {
    const auto& e = spectrum.entries[i];
    if (e.zone == zone) terms.push_back(weighted_power(e, k));
  }
  return sum_descending(std::move(terms));
}

double zone_sum(int n, int k, Zone zone) { return zone_sum(build_spectrum(n), k, zone); }

std::size_t zone_members(const WalkSpectrum& spectrum, Zone zone) {
  return static_cast<std::size_t>(std::count_if(spectrum.entries.begin(), spectrum.entries.end(),
                                                [&](const SpectrumEntry& e) { return e.zone == zone; }));
}

bool a1_eigen_check(int n) {
  require_walk_size(n);
  const Rational third(1, 3);
  for (const Partition& lambda : enumerate_partitions(n)) {
    if (zone_of(lambda) != Zone::A1) continue;
    if (abs(eigenvalue_exact(lambda)) >= third) return false;
  }
  return true;
}

Rational max_nontrivial_eigenvalue(const WalkSpectrum& spectrum) {
  Rational best = 0;
  for (std::size_t i = 1; i < spectrum.entries.size(); ++i) {
    const Rational s = make_rational(std::abs(spectrum.entries[i].eigen_numerator), spectrum.eigen_denominator());
    if (s > best) best = s;
  }
  return best;
}

double ZoneBoundExpressions::a1() const { return std::exp(log_a1); }
double ZoneBoundExpressions::a2() const { return std::exp(log_a2); }
double ZoneBoundExpressions::b1() const { return std::exp(log_b1); }
double ZoneBoundExpressions::b2() const { return std::exp(log_b2); }
double ZoneBoundExpressions::b3() const { return std::exp(log_b3); }

ZoneBoundExpressions zone_bound_expressions(int n, int k) {
  if (n < 10) throw std::invalid_argument("zone_bound_expressions: n must be >= 10");
  if (k < 1) throw std::invalid_argument("zone_bound_expressions: k must be >= 1");
  const double x = n;
  const double log_n = std::log(x);
  const double hr = std::numbers::pi * std::sqrt(2.0 * x / 3.0);

  ZoneBoundExpressions out;
  out.n = n;
  out.k = k;
  out.c = k / x - 0.5 * log_n;
  out.log_a1 = 2.0 * k * std::log(1.0 / 3.0) + std::lgamma(x + 1.0);
  out.log_a2 = hr + x * std::log(4.0) + 2.0 * k * std::log(0.5) + (2.0 * x / 3.0) * log_n;
  out.log_b1 = hr + x * std::log(4.0) + std::lgamma(x / 2.0 + 1.0) +
               2.0 * k * std::log(29.0 / 50.0 + 1.0 / (5.0 * x) + 4.0 / (x * x));

  const int j_max = (3 * n) / 10;
  const auto p = partition_counts(j_max);
  std::vector<double> b2_terms;
  std::vector<double> b3_terms;
  for (int j = 0; j <= j_max; ++j) {
    const double base = std::log(p[static_cast<std::size_t>(j)].convert_to<double>()) - std::lgamma(j + 1.0);
    b2_terms.push_back(base + 2.0 * j * j * log_n / x);
    if (j >= 1) b3_terms.push_back(base + 2.0 * j * (j - 1) * log_n / x);
  }
  out.log_b2 = -4.0 * k / x + log_sum_exp(b2_terms);
  out.log_b3 = -4.0 * out.c + log_sum_exp(b3_terms);
  return out;
}

int steps_for(int n, double c) {
  const double x = n;
  return static_cast<int>(std::floor(0.5 * x * std::log(x) + c * x));
}

DsBoundReport ds_bound_report(const WalkSpectrum& spectrum, double c) {
  const int n = spectrum.n;
  if (n < 4) throw std::invalid_argument("ds_bound_report: n must be >= 4");
  const int k = steps_for(n, c);
  if (k < 1) {
    throw std::invalid_argument("ds_bound_report: k = floor(n log n / 2 + c n) = " + std::to_string(k) +
                                " is below 1");
  }
  DsBoundReport r;
  r.n = n;
  r.c = c;
  r.k = k;
  r.c_realized = static_cast<double>(k) / n - 0.5 * std::log(static_cast<double>(n));
  r.ubl_sqrt = std::sqrt(ubl_bound(spectrum, k));
  r.decay = std::exp(-2.0 * c);
  r.ratio = r.ubl_sqrt / r.decay;
  return r;
}

DsBoundReport ds_bound_report(int n, double c) {
  if (n < 4) throw std::invalid_argument("ds_bound_report: n must be >= 4");
  return ds_bound_report(build_spectrum(n), c);
}

}  // namespace snwalk
