#include "pgl2q/multipoly.hpp"

#include <stdexcept>
#include <string>

namespace pgl2q {

MultiPoly::MultiPoly(int arity) : arity_(arity) {
  if (arity < 1) throw std::invalid_argument("MultiPoly: arity must be >= 1");
}

MultiPoly MultiPoly::constant(int arity, const Rational& value) {
  MultiPoly p(arity);
  p.add_term(std::vector<int>(arity, 0), value);
  return p;
}

MultiPoly MultiPoly::variable(int arity, int index) {
  if (index < 0 || index >= arity)
    throw std::invalid_argument("MultiPoly::variable: index " + std::to_string(index) +
                                " outside arity " + std::to_string(arity));
  MultiPoly p(arity);
  std::vector<int> exps(arity, 0);
  exps[index] = 1;
  p.add_term(exps, Rational(1));
  return p;
}

void MultiPoly::add_term(const std::vector<int>& exponents, const Rational& value) {
  if (static_cast<int>(exponents.size()) != arity_)
    throw std::invalid_argument("MultiPoly::add_term: exponent vector arity mismatch");
  if (value == 0) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, value);
    return;
  }
  it->second += value;
  if (it->second == 0) terms_.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  if (arity_ != other.arity_) throw std::invalid_argument("MultiPoly: arity mismatch in +");
  MultiPoly out = *this;
  for (const auto& [exps, c] : other.terms_) out.add_term(exps, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
  if (arity_ != other.arity_) throw std::invalid_argument("MultiPoly: arity mismatch in -");
  MultiPoly out = *this;
  for (const auto& [exps, c] : other.terms_) out.add_term(exps, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  if (arity_ != other.arity_) throw std::invalid_argument("MultiPoly: arity mismatch in *");
  MultiPoly out(arity_);
  std::vector<int> exps(arity_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) {
      for (int v = 0; v < arity_; ++v) exps[v] = ea[v] + eb[v];
      out.add_term(exps, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::operator*(const Rational& scalar) const {
  MultiPoly out(arity_);
  if (scalar == 0) return out;
  for (const auto& [exps, c] : terms_) out.terms_.emplace(exps, c * scalar);
  return out;
}

Rational MultiPoly::eval(const std::vector<Rational>& values) const {
  if (static_cast<int>(values.size()) != arity_)
    throw std::invalid_argument("MultiPoly::eval: expected " + std::to_string(arity_) +
                                " values");
  Rational total(0);
  for (const auto& [exps, c] : terms_) {
    Rational term = c;
    for (int v = 0; v < arity_; ++v)
      for (int e = 0; e < exps[v]; ++e) term *= values[v];
    total += term;
  }
  return total;
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[i];
}

Rational UniPoly::leading() const {
  if (coeffs_.empty()) throw std::invalid_argument("UniPoly::leading: zero polynomial");
  return coeffs_.back();
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
  std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = coeff(static_cast<int>(i)) + other.coeff(static_cast<int>(i));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& other) const {
  std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = coeff(static_cast<int>(i)) - other.coeff(static_cast<int>(i));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
  if (is_zero() || other.is_zero()) return UniPoly();
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const Rational& scalar) const {
  std::vector<Rational> out(coeffs_);
  for (Rational& c : out) c *= scalar;
  return UniPoly(std::move(out));
}

}  // namespace pgl2q
