#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace snwalk {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Raised when a computation would exceed a configured size cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation requires a character table that is absent or
/// does not match the requested size.
class TableUnavailableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// num / den in lowest terms.
inline Rational make_rational(std::int64_t num, std::int64_t den) { return Rational(BigInt(num), BigInt(den)); }

BigInt factorial(int n);

// (num / den) rounded to the nearest binary64.
double to_double(const BigInt& num, const BigInt& den);
double to_double(const Rational& q);

/// Compensated (Kahan-Babuska) accumulator.
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace snwalk
