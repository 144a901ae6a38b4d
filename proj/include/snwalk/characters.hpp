#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "snwalk/numeric.hpp"
#include "snwalk/partitions.hpp"

namespace snwalk {

/// Character values are stored as int64. |chi| <= d_lambda <= sqrt(n!), which
/// stays below 2^63 for every n up to this bound.
inline constexpr int kMaxTableN = 30;

/// Sum of the contents (column - row) of the boxes of lambda, equivalently
/// sum_k [C(lambda_k, 2) - C(lambda'_k, 2)].
std::int64_t content_sum(const Partition& lambda);

/// chi_lambda(transposition) / d_lambda = content_sum / C(n, 2).
/// Throws std::invalid_argument for n < 2.
Rational character_ratio(const Partition& lambda);

/// The same ratio through the row form
/// (1 / (n(n-1))) sum_j [(lambda_j - j)^2 + (lambda_j - j) - j(j - 1)].
Rational character_ratio_by_rows(const Partition& lambda);

/// Top-down Murnaghan-Nakayama evaluator. Border strips are found as the rim
/// hooks of cells whose hook length equals the largest remaining cycle, rows
/// from the top. Subresults are memoized on (shape, remaining cycle type);
/// concurrent callers share the memo with insert-if-absent semantics.
class MurnaghanNakayama {
 public:
  /// Throws std::invalid_argument if the partitions have different sizes.
  std::int64_t operator()(const Partition& lambda, const Partition& mu);
  std::size_t memo_size() const;

 private:
  std::int64_t eval(const std::vector<int>& shape, std::span<const int> cycles);

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::int64_t> memo_;
};

/// chi_lambda(mu) with a fresh evaluator.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

struct TableOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  std::size_t max_entries = 40'000'000;
};

/// Full character table of S_n. Rows are irreducibles, columns conjugacy
/// classes, both in enumerate_partitions(n) order. Immutable once built.
class CharacterTable {
 public:
  /// Wraps a row-major p(n) x p(n) value array; throws on a size mismatch.
  CharacterTable(int n, std::vector<std::int64_t> values);

  int n() const { return index_->n(); }
  std::size_t size() const { return index_->count(); }
  const PartitionIndex& index() const { return *index_; }
  const Partition& partition(std::size_t i) const { return (*index_)[i]; }

  std::int64_t at(std::size_t row, std::size_t col) const { return values_[row * size() + col]; }
  std::int64_t at(const Partition& lambda, const Partition& mu) const {
    return at(index_->index_of(lambda), index_->index_of(mu));
  }
  std::span<const std::int64_t> row(std::size_t i) const {
    return std::span(values_).subspan(i * size(), size());
  }
  std::span<const std::int64_t> values() const { return values_; }

  const std::vector<BigInt>& dims() const { return dims_; }
  const std::vector<BigInt>& class_sizes() const { return class_sizes_; }

 private:
  std::shared_ptr<const PartitionIndex> index_;
  std::vector<std::int64_t> values_;
  std::vector<BigInt> dims_;
  std::vector<BigInt> class_sizes_;
};

/// Builds the table bottom-up: chi_lambda(mu) only depends on characters of
/// S_{n - mu_1} evaluated at mu with its largest part removed, so the levels
/// m = 0..n are filled in order, each level in parallel over rows. Only the
/// classes at level m that can be reached (largest part <= n - m) are kept.
/// Output is independent of the thread count.
///
/// Throws std::invalid_argument unless 0 <= n <= kMaxTableN and
/// ResourceLimitError if p(n)^2 exceeds options.max_entries.
CharacterTable build_table(int n, const TableOptions& options = {});

}  // namespace snwalk
