#include "snwalk/characters.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "snwalk/parallel.hpp"

namespace snwalk {

namespace {

std::int64_t choose2(std::int64_t v) { return v * (v - 1) / 2; }

void require_ratio_domain(const Partition& lambda) {
  if (lambda.size() < 2) {
    throw std::invalid_argument("character_ratio: n must be >= 2 (no transposition class)");
  }
}

std::string memo_key(const std::vector<int>& shape, std::span<const int> cycles) {
  std::string key;
  key.reserve(shape.size() + cycles.size() + 1);
  for (int v : shape) key.push_back(static_cast<char>(v));
  key.push_back('\0');
  for (int v : cycles) key.push_back(static_cast<char>(v));
  return key;
}

// One level of the bottom-up fill: all shapes of size m against the classes
// of size m that are reachable from the top-level classes.
struct Level {
  std::unique_ptr<PartitionIndex> rows;
  std::vector<Partition> cols;
  std::unordered_map<Partition, std::size_t, PartitionHash> col_of;
  std::vector<std::int64_t> values;  // rows x cols, row-major

  std::int64_t at(std::size_t r, std::size_t c) const { return values[r * cols.size() + c]; }
};

struct Strip {
  std::size_t target;  // row index at level m - length
  int sign;
};

// Rim hooks of the given length, through beta-numbers: with L rows,
// beta_i = lambda_i + L - 1 - i. Removing a rim hook of length r moves one
// bead b to the empty position b - r; the leg length is the number of beads
// strictly between.
std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& lambda, int r) {
  std::vector<std::pair<Partition, int>> out;
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;
  // beta is strictly decreasing; largest bead first means top row first.
  for (int i = 0; i < len; ++i) {
    const int b = beta[static_cast<std::size_t>(i)];
    const int dest = b - r;
    if (dest < 0) continue;
    if (std::find(beta.begin(), beta.end(), dest) != beta.end()) continue;
    int between = 0;
    for (int v : beta) between += (v > dest && v < b) ? 1 : 0;
    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(i)] = dest;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts;
    for (int t = 0; t < len; ++t) {
      const int part = moved[static_cast<std::size_t>(t)] - (len - 1 - t);
      if (part > 0) parts.push_back(part);
    }
    out.emplace_back(Partition(std::move(parts)), (between % 2) ? -1 : 1);
  }
  return out;
}

}  // namespace

std::int64_t content_sum(const Partition& lambda) {
  std::int64_t total = 0;
  for (int part : lambda.parts()) total += choose2(part);
  const Partition conj = transpose(lambda);
  for (int part : conj.parts()) total -= choose2(part);
  return total;
}

Rational character_ratio(const Partition& lambda) {
  require_ratio_domain(lambda);
  return make_rational(content_sum(lambda), choose2(lambda.size()));
}

Rational character_ratio_by_rows(const Partition& lambda) {
  require_ratio_domain(lambda);
  const std::int64_t n = lambda.size();
  std::int64_t total = 0;
  for (int j = 1; j <= lambda.length(); ++j) {
    const std::int64_t d = lambda[static_cast<std::size_t>(j - 1)] - j;
    total += d * d + d - static_cast<std::int64_t>(j) * (j - 1);
  }
  return make_rational(total, n * (n - 1));
}

std::int64_t MurnaghanNakayama::operator()(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw std::invalid_argument("mn_character: partitions of different integers");
  }
  std::vector<int> shape(lambda.parts().begin(), lambda.parts().end());
  return eval(shape, mu.parts());
}

std::size_t MurnaghanNakayama::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

std::int64_t MurnaghanNakayama::eval(const std::vector<int>& shape, std::span<const int> cycles) {
  if (cycles.empty()) return shape.empty() ? 1 : 0;
  if (shape.size() == 1) return 1;  // trivial character

  const std::string key = memo_key(shape, cycles);
  {
    std::shared_lock lock(mutex_);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  const int r = cycles.front();
  const auto rest = cycles.subspan(1);
  const std::size_t rows = shape.size();
  // Column lengths for hook computation.
  std::vector<int> cols(static_cast<std::size_t>(shape.front()), 0);
  for (int part : shape) {
    for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  }

  std::int64_t value = 0;
  std::vector<int> reduced;
  for (std::size_t i = 0; i < rows; ++i) {
    for (int j = 0; j < shape[i]; ++j) {
      const std::size_t bottom = static_cast<std::size_t>(cols[static_cast<std::size_t>(j)]) - 1;
      const int hook = (shape[i] - j) + static_cast<int>(bottom - i);
      if (hook != r) continue;
      reduced.assign(shape.begin(), shape.end());
      for (std::size_t t = i; t < bottom; ++t) reduced[t] = shape[t + 1] - 1;
      reduced[bottom] = j;
      while (!reduced.empty() && reduced.back() == 0) reduced.pop_back();
      const std::int64_t sub = eval(reduced, rest);
      value += ((bottom - i) % 2 == 0) ? sub : -sub;
    }
  }

  std::unique_lock lock(mutex_);
  memo_.try_emplace(key, value);
  return value;
}

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
  MurnaghanNakayama mn;
  return mn(lambda, mu);
}

CharacterTable::CharacterTable(int n, std::vector<std::int64_t> values)
    : index_(std::make_shared<PartitionIndex>(n)), values_(std::move(values)) {
  const std::size_t p = index_->count();
  if (values_.size() != p * p) {
    throw std::invalid_argument("CharacterTable: expected " + std::to_string(p * p) +
                                " values for n = " + std::to_string(n));
  }
  dims_.reserve(p);
  class_sizes_.reserve(p);
  for (const Partition& lambda : index_->list()) {
    dims_.push_back(dimension(lambda));
    class_sizes_.push_back(class_size(lambda));
  }
}

CharacterTable build_table(int n, const TableOptions& options) {
  if (n < 1 || n > kMaxTableN) {
    throw std::invalid_argument("build_table: n must lie in [1, " + std::to_string(kMaxTableN) + "]");
  }
  const BigInt p = partition_count(n);
  if (p * p > options.max_entries) {
    throw ResourceLimitError("build_table: p(" + std::to_string(n) + ")^2 = " + BigInt(p * p).str() +
                             " entries exceeds the cap of " + std::to_string(options.max_entries));
  }

  std::vector<Level> levels(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    Level& level = levels[static_cast<std::size_t>(m)];
    level.rows = std::make_unique<PartitionIndex>(m);
    for (const Partition& nu : level.rows->list()) {
      if (m == n || nu.first() <= n - m) {
        level.col_of.emplace(nu, level.cols.size());
        level.cols.push_back(nu);
      }
    }
  }
  levels[0].values = {1};

  for (int m = 1; m <= n; ++m) {
    Level& level = levels[static_cast<std::size_t>(m)];
    const std::size_t nrows = level.rows->count();
    const std::size_t ncols = level.cols.size();

    // Per column: largest part and the column index of the remainder one level down.
    std::vector<int> col_len(ncols);
    std::vector<std::size_t> col_tail(ncols);
    std::vector<bool> needed_len(static_cast<std::size_t>(m) + 1, false);
    for (std::size_t c = 0; c < ncols; ++c) {
      const Partition& nu = level.cols[c];
      const int r = nu.first();
      col_len[c] = r;
      needed_len[static_cast<std::size_t>(r)] = true;
      const Partition tail(std::vector<int>(nu.parts().begin() + 1, nu.parts().end()));
      col_tail[c] = levels[static_cast<std::size_t>(m - r)].col_of.at(tail);
    }

    level.values.assign(nrows * ncols, 0);
    parallel_for(nrows, options.threads, [&](std::size_t row) {
      const Partition& lambda = (*level.rows)[row];
      std::vector<std::vector<Strip>> strips(static_cast<std::size_t>(m) + 1);
      for (int r = 1; r <= m; ++r) {
        if (!needed_len[static_cast<std::size_t>(r)]) continue;
        const PartitionIndex& below = *levels[static_cast<std::size_t>(m - r)].rows;
        for (auto& [shape, sign] : remove_rim_hooks(lambda, r)) {
          strips[static_cast<std::size_t>(r)].push_back({below.index_of(shape), sign});
        }
      }
      std::int64_t* out = level.values.data() + row * ncols;
      for (std::size_t c = 0; c < ncols; ++c) {
        const int r = col_len[c];
        const Level& lower = levels[static_cast<std::size_t>(m - r)];
        std::int64_t acc = 0;
        for (const Strip& s : strips[static_cast<std::size_t>(r)]) {
          acc += s.sign * lower.at(s.target, col_tail[c]);
        }
        out[c] = acc;
      }
    });
  }

  return CharacterTable(n, std::move(levels[static_cast<std::size_t>(n)].values));
}

}  // namespace snwalk
