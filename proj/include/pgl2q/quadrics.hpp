#ifndef PGL2Q_QUADRICS_HPP
#define PGL2Q_QUADRICS_HPP

#include <map>
#include <utility>
#include <vector>

#include "pgl2q/sl2.hpp"

namespace pgl2q {

// Symmetric bilinear form q_k on S^r(C^2), stored sparsely on its single
// antidiagonal: b_i = q_k(x_i x_{2m+k-i}) for max(0, 2m+k-r) <= i <=
// min(r, 2m+k). The weight constraint forces q_k(x_i x_j) = 0 off that
// antidiagonal, and symmetry gives b_i = b_{2m+k-i}.
class QuadraticForm {
 public:
  QuadraticForm(const Params& params, int k);  // zero form; throws on k outside [0, n]

  const Params& params() const { return params_; }
  int k() const { return k_; }
  int support_lo() const { return lo_; }
  int support_hi() const { return lo_ + static_cast<int>(b_.size()) - 1; }
  bool in_support(int i) const { return i >= support_lo() && i <= support_hi(); }

  // b_i; exact zero outside the support.
  const Rational& coeff(int i) const;
  void set_coeff(int i, const Rational& value);  // throws outside the support

  // q_k(x_a x_b): b_a when a + b = 2m + k and a is in support, else 0.
  const Rational& entry(int a, int b) const;

 private:
  Params params_;
  int k_;
  int lo_;
  std::vector<Rational> b_;
};

// The full tuple (q_0, ..., q_n) together with the free scale
// lambda = q_0(x_0 x_{2m}).
struct FormFamily {
  Params params;
  Rational lambda;
  std::vector<QuadraticForm> forms;  // exactly n+1, indexed by k
};

// Affine cone representative (a_0, ..., a_r) of a point of P^r.
struct AffinePoint {
  Params params;
  std::vector<Rational> coords;  // exactly r+1 entries
};

AffinePoint make_point(const Params& params, std::vector<Rational> coords);

// b_i^0 = (-1)^i C(2m, i) lambda on the antidiagonal i + j = 2m.
QuadraticForm build_q0(const Params& params, const Rational& lambda);

// Extends q_0 to the unique equivariant family via the raising-operator
// recursion (n-k) q_{k+1}(x_i x_j) = (r-i+1) q_k(x_{i-1} x_j) +
// (r-j+1) q_k(x_i x_{j-1}). Throws std::invalid_argument if q0 is not a
// well-formed k = 0 form (wrong index, support, or broken symmetry).
FormFamily extend_recursive(const QuadraticForm& q0);

// Closed form: for 0 <= k <= n/2 and j = 2m+k-i,
//   C(n,k) b_i^k = lambda * sum_{s=max(0,i-k)}^{min(2m,i)}
//                  (-1)^s C(2m,s) C(r-s, r-i) C(r-2m+s, r-j),
// and for k > n/2 the mirror identity b_i^k = b_{r-i}^{n-k}. Out-of-support i
// yields 0; k outside [0, n] throws.
Rational coeff_closed(const Params& params, int k, int i, const Rational& lambda);

// Family assembled from coeff_closed; equals extend_recursive(build_q0(...))
// entry-for-entry.
FormFamily build_closed(const Params& params, const Rational& lambda);

// One equivariance identity check: pass, or the first counterexample (k,i,j)
// together with both sides.
struct IdentityCheck {
  bool pass = true;
  int k = -1, i = -1, j = -1;
  Rational lhs, rhs;
};

// Exhaustive check of the three linearity identities over all
// 0 <= i, j <= r (out-of-range basis indices contribute 0):
//   eq1 (lowering), 1 <= k <= n:
//     k q_{k-1}(x_i x_j) = (i+1) q_k(x_{i+1} x_j) + (j+1) q_k(x_i x_{j+1})
//   eq2 (raising), 0 <= k < n:
//     (n-k) q_{k+1}(x_i x_j) = (r-i+1) q_k(x_{i-1} x_j) + (r-j+1) q_k(x_i x_{j-1})
//   eq3 (weight), 0 <= k <= n:
//     (n - 2k - 2r + 2(i+j)) q_k(x_i x_j) = 0
struct EquivarianceReport {
  IdentityCheck eq1, eq2, eq3;
  bool pass() const { return eq1.pass && eq2.pass && eq3.pass; }
};

EquivarianceReport verify_equivariance(const FormFamily& family);

// Ordered sum q_k(a) = sum_i b_i a_i a_{2m+k-i} over the support (unordered
// pairs {i,j}, i != j, therefore contribute 2 b_i a_i a_j; the middle square
// once). Throws on params mismatch.
Rational evaluate(const QuadraticForm& q, const AffinePoint& point);

// Entry i of the gradient: 2 b_i a_{2m+k-i} (0 outside the support).
std::vector<Rational> gradient(const QuadraticForm& q, const AffinePoint& point);

// Rank of the (r+1) x (r+1) symmetric matrix M[i][j] = b_i on i+j = 2m+k.
int form_rank(const QuadraticForm& q);

// First in-support coefficient q_k(x_0 x_{2m+k}) = lambda C(r-2m, k) / C(n, k),
// nonzero for every 0 <= k <= n/2 (k outside that range throws).
Rational leading_coefficient(const Params& params, int k, const Rational& lambda);

// Monomial-coefficient view of a form: the polynomial coefficient of
// x_i x_j (i < j) is 2 b_i, of x_i^2 it is b_i. Keys are pairs (i, j), i <= j.
// This conversion is the single bridge between the bilinear-form convention
// and every exporter/parser.
std::map<std::pair<int, int>, Rational> monomials(const QuadraticForm& q);

// Rescales each form so its monomial coefficients are coprime integers with
// the smallest-index coefficient positive; lambda is recorded as 1. The
// rescaled family generates the same ideal but is no longer jointly
// equivariant (each k is scaled independently); use for export and span
// comparison. Throws on lambda == 0.
FormFamily normalize(const FormFamily& family);

}  // namespace pgl2q

#endif
