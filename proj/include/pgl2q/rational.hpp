#ifndef PGL2Q_RATIONAL_HPP
#define PGL2Q_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace pgl2q {

// Exact arbitrary-precision scalars. Rational values are kept in lowest
// terms with a positive denominator (gmp arithmetic canonicalizes results;
// direct construction from a num/den pair must go through make_rational).
using Int = mpz_class;
using Rational = mpq_class;

// Canonicalized num/den constructor. Throws std::invalid_argument on den == 0.
Rational make_rational(const Int& num, const Int& den);

// Parses "p" or "p/q" with optional sign. Throws std::invalid_argument on
// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Binomial coefficient with the extended convention used throughout:
// C(a,b) for 0 <= b <= a, and 0 whenever b < 0, b > a, or a < 0.
Int binom(long a, long b);

// "p/q" when the denominator is not 1, plain "p" otherwise.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

}  // namespace pgl2q

#endif
