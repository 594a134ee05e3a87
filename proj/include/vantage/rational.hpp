#pragma once
// Exact arithmetic used across the library. All weights, distances,
// probabilities and counting values are exact rationals / big integers;
// floating point never enters an algorithmic decision.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace vantage {

using BigInt = mpz_class;
using Rational = mpq_class;

// num/den reduced to canonical form (den > 0, gcd(num, den) = 1).
Rational make_rational(const BigInt& num, const BigInt& den);

// Parses "p" or "p/q". Throws std::invalid_argument on malformed input,
// zero denominator, or trailing garbage.
Rational parse_rational(const std::string& text);

// "p/q", or plain "p" when the value is an integer.
std::string fraction_string(const Rational& value);

double to_double(const Rational& value);

BigInt factorial(int n);
BigInt binomial(int n, int k);

// Factorial cache grown on demand. One instance per computation; the
// library keeps no shared mutable state.
class FactorialTable {
 public:
  FactorialTable() : table_{BigInt(1)} {}
  const BigInt& operator()(int n);

 private:
  std::vector<BigInt> table_;
};

}  // namespace vantage
