#include "pgl2q/quadrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pgl2q/matrix.hpp"

namespace pgl2q {

namespace {

const Rational kZero(0);

int support_lo_for(const Params& params, int k) {
  return std::max(0, 2 * params.m + k - params.r);
}

int support_hi_for(const Params& params, int k) {
  return std::min(params.r, 2 * params.m + k);
}

}  // namespace

QuadraticForm::QuadraticForm(const Params& params, int k) : params_(params), k_(k) {
  if (k < 0 || k > params.n)
    throw std::invalid_argument("QuadraticForm: k outside [0, n], got k=" + std::to_string(k));
  lo_ = support_lo_for(params, k);
  b_.assign(support_hi_for(params, k) - lo_ + 1, Rational(0));
}

const Rational& QuadraticForm::coeff(int i) const {
  if (!in_support(i)) return kZero;
  return b_[i - lo_];
}

void QuadraticForm::set_coeff(int i, const Rational& value) {
  if (!in_support(i))
    throw std::invalid_argument("QuadraticForm::set_coeff: index " + std::to_string(i) +
                                " outside support");
  b_[i - lo_] = value;
}

const Rational& QuadraticForm::entry(int a, int b) const {
  if (a + b != 2 * params_.m + k_) return kZero;
  return coeff(a);
}

AffinePoint make_point(const Params& params, std::vector<Rational> coords) {
  if (static_cast<int>(coords.size()) != params.r + 1)
    throw std::invalid_argument("make_point: expected " + std::to_string(params.r + 1) +
                                " coordinates");
  return AffinePoint{params, std::move(coords)};
}

QuadraticForm build_q0(const Params& params, const Rational& lambda) {
  QuadraticForm q(params, 0);
  for (int i = 0; i <= 2 * params.m; ++i) {
    Rational c = Rational(binom(2 * params.m, i)) * lambda;
    if (i % 2 != 0) c = -c;
    q.set_coeff(i, c);
  }
  return q;
}

FormFamily extend_recursive(const QuadraticForm& q0) {
  const Params& params = q0.params();
  if (q0.k() != 0) throw std::invalid_argument("extend_recursive: input must have k = 0");
  if (q0.support_lo() != support_lo_for(params, 0) ||
      q0.support_hi() != support_hi_for(params, 0))
    throw std::invalid_argument("extend_recursive: malformed antidiagonal support");
  for (int i = q0.support_lo(); i <= q0.support_hi(); ++i)
    if (q0.coeff(i) != q0.coeff(2 * params.m - i))
      throw std::invalid_argument("extend_recursive: input form is not symmetric");

  FormFamily family{params, q0.coeff(0), {}};
  family.forms.reserve(params.n + 1);
  family.forms.push_back(q0);
  for (int k = 0; k < params.n; ++k) {
    const QuadraticForm& prev = family.forms.back();
    QuadraticForm next(params, k + 1);
    for (int i = next.support_lo(); i <= next.support_hi(); ++i) {
      const int j = 2 * params.m + k + 1 - i;  // partner index on the new antidiagonal
      Rational value = (params.r - i + 1) * prev.coeff(i - 1) +
                       (params.r - j + 1) * prev.coeff(i);
      value /= params.n - k;
      next.set_coeff(i, value);
    }
    family.forms.push_back(std::move(next));
  }
  return family;
}

Rational coeff_closed(const Params& params, int k, int i, const Rational& lambda) {
  if (k < 0 || k > params.n)
    throw std::invalid_argument("coeff_closed: k outside [0, n], got k=" + std::to_string(k));
  if (2 * k > params.n) return coeff_closed(params, params.n - k, params.r - i, lambda);
  if (i < support_lo_for(params, k) || i > support_hi_for(params, k)) return Rational(0);

  const int j = 2 * params.m + k - i;
  Int total(0);
  const int s_lo = std::max(0, i - k);
  const int s_hi = std::min(2 * params.m, i);
  for (int s = s_lo; s <= s_hi; ++s) {
    Int term = binom(2 * params.m, s) * binom(params.r - s, params.r - i) *
               binom(params.r - 2 * params.m + s, params.r - j);
    if (s % 2 != 0) term = -term;
    total += term;
  }
  return lambda * make_rational(total, binom(params.n, k));
}

FormFamily build_closed(const Params& params, const Rational& lambda) {
  FormFamily family{params, lambda, {}};
  family.forms.reserve(params.n + 1);
  for (int k = 0; k <= params.n; ++k) {
    QuadraticForm q(params, k);
    for (int i = q.support_lo(); i <= q.support_hi(); ++i)
      q.set_coeff(i, coeff_closed(params, k, i, lambda));
    family.forms.push_back(std::move(q));
  }
  return family;
}

namespace {

// q_k(x_a x_b) with out-of-range basis indices treated as the zero vector.
const Rational& family_entry(const FormFamily& family, int k, int a, int b) {
  if (k < 0 || k > family.params.n) return kZero;
  if (a < 0 || a > family.params.r || b < 0 || b > family.params.r) return kZero;
  return family.forms[k].entry(a, b);
}

}  // namespace

EquivarianceReport verify_equivariance(const FormFamily& family) {
  const Params& p = family.params;
  EquivarianceReport report;

  for (int k = 1; k <= p.n && report.eq1.pass; ++k)
    for (int i = 0; i <= p.r && report.eq1.pass; ++i)
      for (int j = 0; j <= p.r; ++j) {
        Rational lhs = k * family_entry(family, k - 1, i, j);
        Rational rhs = (i + 1) * family_entry(family, k, i + 1, j) +
                       (j + 1) * family_entry(family, k, i, j + 1);
        if (lhs != rhs) {
          report.eq1 = IdentityCheck{false, k, i, j, lhs, rhs};
          break;
        }
      }

  for (int k = 0; k < p.n && report.eq2.pass; ++k)
    for (int i = 0; i <= p.r && report.eq2.pass; ++i)
      for (int j = 0; j <= p.r; ++j) {
        Rational lhs = (p.n - k) * family_entry(family, k + 1, i, j);
        Rational rhs = (p.r - i + 1) * family_entry(family, k, i - 1, j) +
                       (p.r - j + 1) * family_entry(family, k, i, j - 1);
        if (lhs != rhs) {
          report.eq2 = IdentityCheck{false, k, i, j, lhs, rhs};
          break;
        }
      }

  for (int k = 0; k <= p.n && report.eq3.pass; ++k)
    for (int i = 0; i <= p.r && report.eq3.pass; ++i)
      for (int j = 0; j <= p.r; ++j) {
        Rational lhs = (p.n - 2 * k - 2 * p.r + 2 * (i + j)) * family_entry(family, k, i, j);
        if (lhs != 0) {
          report.eq3 = IdentityCheck{false, k, i, j, lhs, Rational(0)};
          break;
        }
      }

  return report;
}

Rational evaluate(const QuadraticForm& q, const AffinePoint& point) {
  if (!(q.params() == point.params))
    throw std::invalid_argument("evaluate: params mismatch between form and point");
  const int diag = 2 * q.params().m + q.k();
  Rational total(0);
  for (int i = q.support_lo(); i <= q.support_hi(); ++i)
    total += q.coeff(i) * point.coords[i] * point.coords[diag - i];
  return total;
}

std::vector<Rational> gradient(const QuadraticForm& q, const AffinePoint& point) {
  if (!(q.params() == point.params))
    throw std::invalid_argument("gradient: params mismatch between form and point");
  const int diag = 2 * q.params().m + q.k();
  std::vector<Rational> grad(q.params().r + 1, Rational(0));
  for (int i = q.support_lo(); i <= q.support_hi(); ++i)
    grad[i] = 2 * q.coeff(i) * point.coords[diag - i];
  return grad;
}

int form_rank(const QuadraticForm& q) {
  const int size = q.params().r + 1;
  const int diag = 2 * q.params().m + q.k();
  ExactMatrix mat(size, size);
  for (int i = q.support_lo(); i <= q.support_hi(); ++i) mat.at(i, diag - i) = q.coeff(i);
  return rank_exact(mat);
}

Rational leading_coefficient(const Params& params, int k, const Rational& lambda) {
  if (k < 0 || 2 * k > params.n)
    throw std::invalid_argument("leading_coefficient: k outside [0, n/2], got k=" +
                                std::to_string(k));
  return lambda * make_rational(binom(params.r - 2 * params.m, k), binom(params.n, k));
}

std::map<std::pair<int, int>, Rational> monomials(const QuadraticForm& q) {
  std::map<std::pair<int, int>, Rational> out;
  const int diag = 2 * q.params().m + q.k();
  for (int i = q.support_lo(); i <= q.support_hi(); ++i) {
    const int j = diag - i;
    if (i > j) continue;
    const Rational& b = q.coeff(i);
    if (b == 0) continue;
    out[{i, j}] = (i == j) ? b : 2 * b;
  }
  return out;
}

FormFamily normalize(const FormFamily& family) {
  if (family.lambda == 0) throw std::invalid_argument("normalize: degenerate family (lambda = 0)");
  FormFamily out{family.params, Rational(1), {}};
  out.forms.reserve(family.forms.size());
  for (const QuadraticForm& q : family.forms) {
    const auto mono = monomials(q);
    // scale = sign / (gcd of numerators / lcm of denominators), so that the
    // monomial coefficients become coprime integers, smallest index positive
    Int num_gcd(0), den_lcm(1);
    for (const auto& [key, c] : mono) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational scale(1);
    if (num_gcd != 0) {
      scale = make_rational(den_lcm, num_gcd);
      if (mono.begin()->second * scale < 0) scale = -scale;
    }
    QuadraticForm scaled(q.params(), q.k());
    for (int i = scaled.support_lo(); i <= scaled.support_hi(); ++i)
      scaled.set_coeff(i, q.coeff(i) * scale);
    out.forms.push_back(std::move(scaled));
  }
  return out;
}

}  // namespace pgl2q
