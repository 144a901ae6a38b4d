#include "snwalk/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace snwalk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::row(int n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  return n == 0 ? Partition{} : Partition({n});
}

Partition Partition::column(int n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Partition Partition::transposition(int n) {
  if (n < 2) throw std::invalid_argument("S_n has no transpositions for n < 2");
  std::vector<int> parts(static_cast<std::size_t>(n - 1), 1);
  parts[0] = 2;
  return Partition(std::move(parts));
}

int Partition::multiplicity(int v) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  if (text.empty()) return Partition{};
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, '-')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition '" + text + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("malformed partition '" + text + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.parts()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
  if (n > kMaxPartitionN) {
    throw std::invalid_argument("enumerate_partitions: n > " + std::to_string(kMaxPartitionN) +
                                " is not supported");
  }
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> a{n};
  for (;;) {
    out.emplace_back(a);
    // Rightmost part larger than one; everything after it is a run of ones.
    std::size_t j = a.size();
    while (j > 0 && a[j - 1] == 1) --j;
    if (j == 0) break;
    const int v = --a[j - 1];
    int rest = static_cast<int>(a.size() - j) + 1;
    a.resize(j);
    while (rest > 0) {
      const int piece = std::min(v, rest);
      a.push_back(piece);
      rest -= piece;
    }
  }
  return out;
}

Partition transpose(const Partition& lambda) {
  std::vector<int> cols(static_cast<std::size_t>(lambda.first()), 0);
  for (int part : lambda.parts()) {
    for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw std::invalid_argument("dominates: partitions of different integers");
  }
  const std::size_t len = static_cast<std::size_t>(std::max(lambda.length(), mu.length()));
  int a = 0;
  int b = 0;
  for (std::size_t i = 0; i < len; ++i) {
    a += lambda[i];
    b += mu[i];
    if (a < b) return false;
  }
  return true;
}

BigInt hook_product(const Partition& lambda) {
  const Partition conj = transpose(lambda);
  BigInt prod = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
      const int arm = lambda[static_cast<std::size_t>(i)] - j - 1;
      const int leg = conj[static_cast<std::size_t>(j)] - i - 1;
      prod *= arm + leg + 1;
    }
  }
  return prod;
}

BigInt dimension(const Partition& lambda) {
  return factorial(lambda.size()) / hook_product(lambda);
}

BigInt centralizer_order(const Partition& mu) {
  BigInt z = 1;
  std::size_t i = 0;
  const auto parts = mu.parts();
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int mult = static_cast<int>(j - i);
    BigInt power = 1;
    for (int t = 0; t < mult; ++t) power *= parts[i];
    z *= power * factorial(mult);
    i = j;
  }
  return z;
}

BigInt class_size(const Partition& mu) { return factorial(mu.size()) / centralizer_order(mu); }

std::vector<BigInt> partition_counts(int n) {
  if (n < 0 || n > kMaxPartitionCountN) {
    throw std::invalid_argument("partition_count: n must lie in [0, 10000]");
  }
  std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const int g2 = k * (3 * k + 1) / 2;
      const bool plus = (k % 2) == 1;
      const BigInt& t1 = p[static_cast<std::size_t>(m - g1)];
      if (plus) acc += t1; else acc -= t1;
      if (g2 <= m) {
        const BigInt& t2 = p[static_cast<std::size_t>(m - g2)];
        if (plus) acc += t2; else acc -= t2;
      }
    }
    p[static_cast<std::size_t>(m)] = std::move(acc);
  }
  return p;
}

BigInt partition_count(int n) { return partition_counts(n).back(); }

double hardy_ramanujan_estimate(int n) {
  if (n < 1) throw std::invalid_argument("hardy_ramanujan_estimate: n must be >= 1");
  const double x = static_cast<double>(n);
  return std::exp(std::numbers::pi * std::sqrt(2.0 * x / 3.0)) / (4.0 * x * std::sqrt(3.0));
}

PartitionIndex::PartitionIndex(int n) : n_(n), list_(enumerate_partitions(n)) {
  lookup_.reserve(list_.size());
  for (std::size_t i = 0; i < list_.size(); ++i) lookup_.emplace(list_[i], i);
}

std::size_t PartitionIndex::index_of(const Partition& p) const {
  const auto it = lookup_.find(p);
  if (it == lookup_.end()) {
    throw std::out_of_range("partition (" + p.to_string() + ") is not a partition of " +
                            std::to_string(n_));
  }
  return it->second;
}

}  // namespace snwalk
