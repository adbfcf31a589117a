#ifndef PGL2Q_MULTIPOLY_HPP
#define PGL2Q_MULTIPOLY_HPP

#include <map>
#include <vector>

#include "pgl2q/rational.hpp"

namespace pgl2q {

// Sparse multivariate polynomial over an ordered variable list of fixed
// arity. Terms map exponent vectors (one entry per variable) to nonzero
// rational coefficients; zero coefficients are never stored.
class MultiPoly {
 public:
  explicit MultiPoly(int arity);  // the zero polynomial

  static MultiPoly constant(int arity, const Rational& value);
  static MultiPoly variable(int arity, int index);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  // Accumulates one term; drops the entry if the sum cancels to zero.
  void add_term(const std::vector<int>& exponents, const Rational& value);

  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly operator*(const MultiPoly& other) const;
  MultiPoly operator*(const Rational& scalar) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  // Exact evaluation; values must supply one Rational per variable.
  Rational eval(const std::vector<Rational>& values) const;

 private:
  int arity_;
  std::map<std::vector<int>, Rational> terms_;
};

// Dense polynomial in one variable; coefficient i belongs to d^i, trailing
// zeros trimmed so the degree is well-defined (-1 for the zero polynomial).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int i) const;  // 0 beyond the degree
  Rational leading() const;     // throws on the zero polynomial
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  UniPoly operator+(const UniPoly& other) const;
  UniPoly operator-(const UniPoly& other) const;
  UniPoly operator*(const UniPoly& other) const;
  UniPoly operator*(const Rational& scalar) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace pgl2q

#endif  // PGL2Q_MULTIPOLY_HPP
