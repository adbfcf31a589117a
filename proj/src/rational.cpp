#include "pgl2q/rational.hpp"

#include <stdexcept>

namespace pgl2q {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Int(text));
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
  }
}

Int binom(long a, long b) {
  if (b < 0 || a < 0 || b > a) return Int(0);
  Int result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return result;
}

std::string to_string(const Rational& q) {
  return q.get_str();
}

bool is_integer(const Rational& q) {
  return q.get_den() == 1;
}

}  // namespace pgl2q
