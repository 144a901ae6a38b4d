#include "snwalk/walk.hpp"

#include <gmp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>

#include "snwalk/parallel.hpp"

namespace snwalk {

namespace {

constexpr std::size_t kColumnBlock = 64;
constexpr std::uint64_t kShards = 64;

void require_same_n(const ClassDistribution& a, const ClassDistribution& b, const char* what) {
  if (a.n != b.n) throw std::invalid_argument(std::string(what) + ": distributions on different groups");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

Partition cycle_type(const std::vector<int>& perm) {
  std::vector<int> parts;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

}  // namespace

ClassLayout::ClassLayout(int n) : index_(n), order_(factorial(n)) {
  for (const Partition& mu : index_.list()) {
    centralizers_.push_back(centralizer_order(mu));
    sizes_.push_back(order_ / centralizers_.back());
    sizes_d_.push_back(sizes_.back().convert_to<double>());
  }
}

const ClassLayout& class_layout(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const ClassLayout>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<const ClassLayout>(n);
  return *slot;
}

double ClassDistribution::class_mass(std::size_t i) const {
  return probs[i] * class_layout(n).size_value(i);
}

double ClassDistribution::total_mass() const {
  KahanSum acc;
  for (std::size_t i = 0; i < probs.size(); ++i) acc.add(class_mass(i));
  return acc.value();
}

ClassDistribution walk_measure(int n) {
  if (n < 2) throw std::invalid_argument("walk_measure: n must be >= 2");
  const auto& layout = class_layout(n);
  ClassDistribution d{n, std::vector<double>(layout.count(), 0.0)};
  const double x = n;
  d.probs[layout.index().identity_index()] = 1.0 / x;
  d.probs[layout.index().index_of(Partition::transposition(n))] = 2.0 / (x * x);
  return d;
}

ClassDistribution uniform_distribution(int n) {
  const auto& layout = class_layout(n);
  return {n, std::vector<double>(layout.count(), 1.0 / layout.group_order().convert_to<double>())};
}

ClassDistribution identity_distribution(int n) {
  const auto& layout = class_layout(n);
  ClassDistribution d{n, std::vector<double>(layout.count(), 0.0)};
  d.probs[layout.index().identity_index()] = 1.0;
  return d;
}

ExactWalk::ExactWalk(std::shared_ptr<const CharacterTable> table, unsigned threads)
    : table_(std::move(table)), threads_(threads) {
  if (!table_) throw TableUnavailableError("no character table supplied");
  const int n = table_->n();
  if (n < 2 || n > kMaxExactN) {
    throw TableUnavailableError("exact distributions support 2 <= n <= " + std::to_string(kMaxExactN) +
                                ", got table for n = " + std::to_string(n));
  }
  spectrum_ = build_spectrum(n, threads);
}

std::vector<BigInt> ExactWalk::class_sums(int k, const Subset& include) const {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  const std::size_t p = table_->size();
  std::vector<std::size_t> rows;
  std::vector<BigInt> weights;
  for (std::size_t i = 0; i < p; ++i) {
    const SpectrumEntry& e = spectrum_.entries[i];
    if (!include(e)) continue;
    BigInt w = pow(BigInt(e.eigen_numerator), static_cast<unsigned>(k));
    if (w == 0) continue;
    rows.push_back(i);
    weights.push_back(e.dim * w);
  }

  std::vector<BigInt> sums(p);
  const std::size_t blocks = (p + kColumnBlock - 1) / kColumnBlock;
  parallel_for(blocks, threads_, [&](std::size_t b) {
    const std::size_t lo = b * kColumnBlock;
    const std::size_t hi = std::min(p, lo + kColumnBlock);
    std::vector<mpz_t> acc(hi - lo);
    for (auto& a : acc) mpz_init(a);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto row = table_->row(rows[r]);
      const mpz_srcptr w = weights[r].backend().data();
      for (std::size_t c = lo; c < hi; ++c) {
        const std::int64_t chi = row[c];
        if (chi > 0) {
          mpz_addmul_ui(acc[c - lo], w, static_cast<unsigned long>(chi));
        } else if (chi < 0) {
          mpz_submul_ui(acc[c - lo], w, static_cast<unsigned long>(-chi));
        }
      }
    }
    for (std::size_t c = lo; c < hi; ++c) {
      mpz_set(sums[c].backend().data(), acc[c - lo]);
      mpz_clear(acc[c - lo]);
    }
  });
  return sums;
}

std::vector<Rational> ExactWalk::class_masses(int k) const {
  const auto sums = class_sums(k, [](const SpectrumEntry&) { return true; });
  const BigInt scale = pow(BigInt(spectrum_.eigen_denominator()), static_cast<unsigned>(k));
  const auto& layout = class_layout(n());
  std::vector<Rational> masses(sums.size());
  for (std::size_t i = 0; i < sums.size(); ++i) {
    masses[i] = Rational(sums[i], layout.centralizer(i) * scale);
  }
  return masses;
}

ClassDistribution ExactWalk::distribution(int k) const {
  const auto sums = class_sums(k, [](const SpectrumEntry&) { return true; });
  const BigInt denom = class_layout(n()).group_order() *
                       pow(BigInt(spectrum_.eigen_denominator()), static_cast<unsigned>(k));
  ClassDistribution d{n(), std::vector<double>(sums.size())};
  for (std::size_t i = 0; i < sums.size(); ++i) d.probs[i] = to_double(sums[i], denom);
  return d;
}

double ExactWalk::restricted_l1(int k, const Subset& include) const {
  const auto sums = class_sums(k, [&](const SpectrumEntry& e) {
    return e.lambda.length() > 1 && include(e);
  });
  const BigInt scale = pow(BigInt(spectrum_.eigen_denominator()), static_cast<unsigned>(k));
  const auto& layout = class_layout(n());
  std::vector<double> terms(sums.size());
  for (std::size_t i = 0; i < sums.size(); ++i) {
    terms[i] = to_double(abs(sums[i]), layout.centralizer(i) * scale);
  }
  std::sort(terms.begin(), terms.end());
  KahanSum acc;
  for (double t : terms) acc.add(t);
  return 0.5 * acc.value();
}

double ExactWalk::tv_to_uniform(int k) const {
  return restricted_l1(k, [](const SpectrumEntry&) { return true; });
}

ClassDistribution exact_distribution(std::shared_ptr<const CharacterTable> table, int k) {
  return ExactWalk(std::move(table)).distribution(k);
}

ClassDistribution convolve_oracle(const ClassDistribution& f, const ClassDistribution& h) {
  require_same_n(f, h, "convolve_oracle");
  const int n = f.n;
  if (n < 1 || n > kMaxOracleN) {
    throw std::invalid_argument("convolve_oracle: n must lie in [1, " + std::to_string(kMaxOracleN) + "]");
  }
  const auto& layout = class_layout(n);

  // Enumerate S_n; perfect hash by base-n digits.
  std::vector<std::vector<int>> elems;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    elems.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto code = [n](const std::vector<int>& p) {
    std::size_t c = 0;
    for (int v : p) c = c * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
    return c;
  };
  std::size_t span = 1;
  for (int i = 0; i < n; ++i) span *= static_cast<std::size_t>(n);
  std::vector<std::uint32_t> rank(span, 0);
  std::vector<std::size_t> cls(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    rank[code(elems[i])] = static_cast<std::uint32_t>(i);
    cls[i] = layout.index().index_of(cycle_type(elems[i]));
  }

  std::vector<double> fv(elems.size());
  std::vector<double> hv(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    fv[i] = f.probs[cls[i]];
    hv[i] = h.probs[cls[i]];
  }

  std::vector<double> out(elems.size(), 0.0);
  std::vector<int> inv(static_cast<std::size_t>(n));
  std::vector<int> prod(static_cast<std::size_t>(n));
  for (std::size_t ti = 0; ti < elems.size(); ++ti) {
    const auto& t = elems[ti];
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])] = i;
    const double ft = fv[rank[code(inv)]];
    if (ft == 0.0) continue;
    for (std::size_t si = 0; si < elems.size(); ++si) {
      const auto& s = elems[si];
      // (t s)(i) = t(s(i))
      for (int i = 0; i < n; ++i) {
        prod[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])];
      }
      out[si] += ft * hv[rank[code(prod)]];
    }
  }

  ClassDistribution result{n, std::vector<double>(layout.count(), 0.0)};
  std::vector<char> set(layout.count(), 0);
  double scale = 0.0;
  for (double v : out) scale = std::max(scale, std::abs(v));
  const double tol = 1e-12 * std::max(scale, 1e-300);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const std::size_t c = cls[i];
    if (!set[c]) {
      result.probs[c] = out[i];
      set[c] = 1;
    } else if (std::abs(result.probs[c] - out[i]) > tol) {
      throw std::logic_error("convolve_oracle: result is not a class function");
    }
  }
  return result;
}

double tv_distance(const ClassDistribution& d1, const ClassDistribution& d2) {
  require_same_n(d1, d2, "tv_distance");
  if (d1.probs.size() != d2.probs.size()) throw std::invalid_argument("tv_distance: malformed distribution");
  const auto& layout = class_layout(d1.n);
  std::vector<double> terms(d1.probs.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const double a = std::max(d1.probs[i], 0.0);
    const double b = std::max(d2.probs[i], 0.0);
    terms[i] = layout.size_value(i) * std::abs(a - b);
  }
  std::sort(terms.begin(), terms.end());
  KahanSum acc;
  for (double t : terms) acc.add(t);
  return 0.5 * acc.value();
}

EmpiricalDistribution simulate_shuffle(int n, int k, std::uint64_t trials, std::uint64_t seed,
                                       unsigned threads) {
  if (n < 1 || n > kMaxPartitionN) throw std::invalid_argument("simulate_shuffle: n must lie in [1, 40]");
  if (k < 0) throw std::invalid_argument("simulate_shuffle: k must be >= 0");
  if (trials < 1) throw std::invalid_argument("simulate_shuffle: trials must be >= 1");
  const auto& layout = class_layout(n);
  const std::size_t p = layout.count();

  std::vector<std::vector<std::uint64_t>> shard_counts(kShards, std::vector<std::uint64_t>(p, 0));
  parallel_for(kShards, threads, [&](std::size_t shard) {
    const std::uint64_t share = trials / kShards + (shard < trials % kShards ? 1 : 0);
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(shard + 1)));
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> deck(static_cast<std::size_t>(n));
    auto& counts = shard_counts[shard];
    for (std::uint64_t t = 0; t < share; ++t) {
      std::iota(deck.begin(), deck.end(), 0);
      for (int step = 0; step < k; ++step) {
        const int a = pick(rng);
        const int b = pick(rng);
        std::swap(deck[static_cast<std::size_t>(a)], deck[static_cast<std::size_t>(b)]);
      }
      ++counts[layout.index().index_of(cycle_type(deck))];
    }
  });

  EmpiricalDistribution out;
  out.trials = trials;
  out.generator = "mt19937_64/splitmix64-shards-" + std::to_string(kShards);
  out.counts.assign(p, 0);
  for (const auto& counts : shard_counts) {
    for (std::size_t i = 0; i < p; ++i) out.counts[i] += counts[i];
  }
  out.dist.n = n;
  out.dist.probs.resize(p);
  for (std::size_t i = 0; i < p; ++i) {
    out.dist.probs[i] = static_cast<double>(out.counts[i]) / static_cast<double>(trials) / layout.size_value(i);
  }
  return out;
}

}  // namespace snwalk
