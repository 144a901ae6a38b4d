#include "snwalk/numeric.hpp"

namespace snwalk {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double to_double(const BigInt& num, const BigInt& den) { return to_double(Rational(num, den)); }

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace snwalk
