#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "snwalk/numeric.hpp"

namespace snwalk {

/// Largest n for which partition lists are materialized.
inline constexpr int kMaxPartitionN = 40;
/// Largest n accepted by partition_count.
inline constexpr int kMaxPartitionCountN = 10000;

/// An integer partition lambda_1 >= ... >= lambda_m >= 1 of n, drawn as a
/// Young diagram in English notation (row i has lambda_i boxes, longest row
/// on top). The empty partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<int> parts);

  /// (n)
  static Partition row(int n);
  /// (1^n)
  static Partition column(int n);
  /// (2, 1^{n-2}), the cycle type of a transposition.
  static Partition transposition(int n);

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// lambda_i for 0-based i; 0 past the last row.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }
  /// Multiplicity of part value v.
  int multiplicity(int v) const;

  /// Dash-joined parts, e.g. "3-2-1-1"; "" for the empty partition.
  std::string to_string() const;
  /// Inverse of to_string.
  static Partition parse(const std::string& text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Every partition of n, in reverse-lexicographic order starting at (n) and
/// ending at (1^n). Throws std::invalid_argument for n < 0 or n > 40.
std::vector<Partition> enumerate_partitions(int n);

/// Conjugate partition: lambda'_j = #{i : lambda_i >= j}.
Partition transpose(const Partition& lambda);

/// True iff every prefix sum of lambda is >= the matching prefix sum of mu.
/// Throws std::invalid_argument if the partitions have different sizes.
bool dominates(const Partition& lambda, const Partition& mu);

/// Product of the hook lengths of the diagram.
BigInt hook_product(const Partition& lambda);
/// Degree of the irreducible representation: n! / prod(hooks).
BigInt dimension(const Partition& lambda);
/// z_mu = prod_i i^{m_i} m_i!, the centralizer order of a permutation of
/// cycle type mu.
BigInt centralizer_order(const Partition& mu);
/// Number of permutations with cycle type mu: n! / z_mu.
BigInt class_size(const Partition& mu);

/// p(n) by Euler's pentagonal recurrence, 0 <= n <= 10000.
BigInt partition_count(int n);
/// [p(0), ..., p(n)].
std::vector<BigInt> partition_counts(int n);

/// exp(pi sqrt(2n/3)) / (4 n sqrt 3).
double hardy_ramanujan_estimate(int n);

/// Enumeration of the partitions of n with O(1) index lookup. Row and column
/// order of every table in the library follows this ordering.
class PartitionIndex {
 public:
  explicit PartitionIndex(int n);

  int n() const { return n_; }
  std::size_t count() const { return list_.size(); }
  const std::vector<Partition>& list() const { return list_; }
  const Partition& operator[](std::size_t i) const { return list_[i]; }
  /// Throws std::out_of_range if p is not a partition of n.
  std::size_t index_of(const Partition& p) const;
  std::size_t identity_index() const { return list_.size() - 1; }
  std::size_t trivial_index() const { return 0; }

 private:
  int n_;
  std::vector<Partition> list_;
  std::unordered_map<Partition, std::size_t, PartitionHash> lookup_;
};

}  // namespace snwalk
