#include "vantage/rational.hpp"

#include <stdexcept>

namespace vantage {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      BigInt num(text, 10);
      return Rational(num);
    }
    BigInt num(text.substr(0, slash), 10);
    BigInt den(text.substr(slash + 1), 10);
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
}

std::string fraction_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return BigInt(0);
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

const BigInt& FactorialTable::operator()(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  while (static_cast<int>(table_.size()) <= n) {
    table_.push_back(table_.back() * static_cast<int>(table_.size()));
  }
  return table_[static_cast<std::size_t>(n)];
}

}  // namespace vantage
