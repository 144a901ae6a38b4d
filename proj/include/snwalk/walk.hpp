#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "snwalk/characters.hpp"
#include "snwalk/numeric.hpp"
#include "snwalk/partitions.hpp"
#include "snwalk/spectrum.hpp"

namespace snwalk {

/// Largest n accepted by the permutation-enumerating oracle.
inline constexpr int kMaxOracleN = 8;
/// Largest n for exact distributions.
inline constexpr int kMaxExactN = 25;
/// Rounding tolerance for masses that should be nonnegative.
inline constexpr double kNegativeMassTolerance = 1e-12;

/// Partitions of n with their class sizes, shared and immutable.
class ClassLayout {
 public:
  explicit ClassLayout(int n);
  int n() const { return index_.n(); }
  std::size_t count() const { return index_.count(); }
  const PartitionIndex& index() const { return index_; }
  const BigInt& size(std::size_t i) const { return sizes_[i]; }
  double size_value(std::size_t i) const { return sizes_d_[i]; }
  const BigInt& centralizer(std::size_t i) const { return centralizers_[i]; }
  const BigInt& group_order() const { return order_; }

 private:
  PartitionIndex index_;
  std::vector<BigInt> sizes_;
  std::vector<BigInt> centralizers_;
  std::vector<double> sizes_d_;
  BigInt order_;
};

/// Cached layout for n (0 <= n <= 40).
const ClassLayout& class_layout(int n);

/// A measure on S_n that is constant on conjugacy classes. probs[i] is the
/// value at each single permutation of cycle type enumerate_partitions(n)[i];
/// the mass of the class is probs[i] * |C_i|.
struct ClassDistribution {
  int n = 0;
  std::vector<double> probs;

  double class_mass(std::size_t i) const;
  double total_mass() const;
};

/// 1/n at the identity, 2/n^2 at each transposition. n >= 2.
ClassDistribution walk_measure(int n);
ClassDistribution uniform_distribution(int n);
ClassDistribution identity_distribution(int n);

/// Exact Fourier-side evaluation of the k-step walk against a character
/// table. With s_lambda = a_lambda / n^2 every quantity reduces to the integer
/// class sums S_mu = sum_{lambda in subset} d_lambda a_lambda^k chi_lambda(mu),
/// which are accumulated exactly and divided once at the end.
class ExactWalk {
 public:
  using Subset = std::function<bool(const SpectrumEntry&)>;

  /// Throws TableUnavailableError for a null table or n outside [2, 25].
  explicit ExactWalk(std::shared_ptr<const CharacterTable> table, unsigned threads = 0);

  int n() const { return spectrum_.n; }
  const WalkSpectrum& spectrum() const { return spectrum_; }
  const CharacterTable& table() const { return *table_; }

  /// S_mu for every class, over the irreducibles accepted by `include`.
  std::vector<BigInt> class_sums(int k, const Subset& include) const;

  /// P^{*k} by Fourier inversion.
  ClassDistribution distribution(int k) const;
  /// Exact class masses P^{*k}(C_mu) as rationals.
  std::vector<Rational> class_masses(int k) const;
  /// ||P^{*k} - U||_TV.
  double tv_to_uniform(int k) const;
  /// (1 / (2 n!)) sum_g |sum_{lambda in subset, lambda != (n)} d s^k chi(g)|.
  double restricted_l1(int k, const Subset& include) const;

 private:
  std::shared_ptr<const CharacterTable> table_;
  WalkSpectrum spectrum_;
  unsigned threads_;
};

ClassDistribution exact_distribution(std::shared_ptr<const CharacterTable> table, int k);

/// (f * h)(s) = sum_t f(t^{-1}) h(t s), by enumerating S_n element by element.
/// The result is checked to be constant on classes. n <= 8.
ClassDistribution convolve_oracle(const ClassDistribution& f, const ClassDistribution& h);

/// (1/2) sum_mu |C_mu| |p1 - p2|, with values below zero clamped to zero.
double tv_distance(const ClassDistribution& d1, const ClassDistribution& d2);

struct EmpiricalDistribution {
  ClassDistribution dist;
  std::vector<std::uint64_t> counts;
  std::uint64_t trials = 0;
  std::string generator;
};

/// Deterministic shuffle simulation: each trial takes k steps of "pick two
/// positions uniformly and independently, swap them" on an ordered deck and
/// records the cycle type. Trials are split into fixed shards whose seeds are
/// derived from `seed`, so the output does not depend on `threads`.
EmpiricalDistribution simulate_shuffle(int n, int k, std::uint64_t trials, std::uint64_t seed,
                                       unsigned threads = 0);

}  // namespace snwalk
