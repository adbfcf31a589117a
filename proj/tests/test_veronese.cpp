#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "pgl2q/veronese.hpp"

using namespace pgl2q;

namespace {

// Exponent vector helper: ex({a, b, ...}) for readability below.
std::vector<int> ex(std::vector<int> v) { return v; }

// Alternative chart scaled by the falling factorial j!/(j-s)! (the literal
// s-th derivative of t^j) instead of C(j, s). The two parametrize the same
// osculating plane, so containment verdicts must agree.
OsculatingChart derivative_chart(int r, int p) {
  OsculatingChart out{r, p, {}};
  out.coords.reserve(r + 1);
  for (int j = 0; j <= r; ++j) {
    MultiPoly c(p + 1);
    std::vector<int> mono(p + 1, 0);
    mono[0] = j;
    c.add_term(mono, Rational(1));
    for (int s = 1; s <= p && s <= j; ++s) {
      Int falling(1);
      for (int f = 0; f < s; ++f) falling *= j - f;
      std::vector<int> term(p + 1, 0);
      term[0] = j - s;
      term[s] = 1;
      c.add_term(term, Rational(falling));
    }
    out.coords.push_back(c);
  }
  return out;
}

bool contains_via(const OsculatingChart& c, const FormFamily& family) {
  for (const QuadraticForm& q : family.forms)
    if (!substitute(q, c).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("multivariate polynomial ring laws") {
  const MultiPoly t = MultiPoly::variable(2, 0);
  const MultiPoly l = MultiPoly::variable(2, 1);
  const MultiPoly one = MultiPoly::constant(2, Rational(1));

  const MultiPoly f = t * t + l * Rational(3) - one;
  const MultiPoly g = t * l + one;
  const MultiPoly h = t - l;

  CHECK(f * g == g * f);
  CHECK((f + g) * h == f * h + g * h);
  CHECK(f - f == MultiPoly(2));
  CHECK((f * MultiPoly(2)).is_zero());

  // Cancellation drops stored terms entirely.
  MultiPoly cancel(1);
  cancel.add_term(ex({2}), Rational(5));
  cancel.add_term(ex({2}), Rational(-5));
  CHECK(cancel.is_zero());
  CHECK(cancel.terms().empty());

  CHECK(f.eval({Rational(2), Rational(-1)}) == 0);  // 4 - 3 - 1
  CHECK(g.eval({Rational(1, 2), Rational(4)}) == 3);
}

TEST_CASE("univariate polynomial arithmetic and trimming") {
  const UniPoly zero;
  CHECK(zero.degree() == -1);
  CHECK(zero.is_zero());
  CHECK_THROWS_AS(zero.leading(), std::invalid_argument);

  const UniPoly a({Rational(1), Rational(0), Rational(3)});  // 3d^2 + 1
  const UniPoly b({Rational(-1), Rational(2)});              // 2d - 1
  CHECK(a.degree() == 2);
  CHECK(a.coeff(1) == 0);
  CHECK(a.coeff(5) == 0);
  CHECK(a.leading() == 3);

  const UniPoly prod = a * b;  // 6d^3 - 3d^2 + 2d - 1
  CHECK(prod == UniPoly({Rational(-1), Rational(2), Rational(-3), Rational(6)}));
  CHECK(a + b == UniPoly({Rational(0), Rational(2), Rational(3)}));

  // Subtraction that kills the top coefficient must re-trim.
  const UniPoly c({Rational(0), Rational(0), Rational(3)});
  CHECK((a - c).degree() == 0);
  CHECK((a - a).is_zero());
  CHECK(UniPoly({Rational(0), Rational(0)}).is_zero());
}

TEST_CASE("chart coordinates follow the divided derivative pattern") {
  // r = 2, p = 1: (1, t + l_1, t^2 + 2 l_1 t).
  const OsculatingChart c21 = chart(2, 1);
  REQUIRE(c21.coords.size() == 3);
  MultiPoly expected0 = MultiPoly::constant(2, Rational(1));
  CHECK(c21.coords[0] == expected0);
  MultiPoly expected1(2);
  expected1.add_term(ex({1, 0}), Rational(1));
  expected1.add_term(ex({0, 1}), Rational(1));
  CHECK(c21.coords[1] == expected1);
  MultiPoly expected2(2);
  expected2.add_term(ex({2, 0}), Rational(1));
  expected2.add_term(ex({1, 1}), Rational(2));
  CHECK(c21.coords[2] == expected2);

  // p = 0 is the plain rational normal curve: coordinate j = t^j.
  const OsculatingChart c30 = chart(3, 0);
  for (int j = 0; j <= 3; ++j) {
    MultiPoly tj(1);
    tj.add_term(ex({j}), Rational(1));
    CHECK(c30.coords[j] == tj);
  }

  // r = 4, p = 2, coordinate 4 = t^4 + 4 l_1 t^3 + 6 l_2 t^2.
  const OsculatingChart c42 = chart(4, 2);
  MultiPoly coord4(3);
  coord4.add_term(ex({4, 0, 0}), Rational(1));
  coord4.add_term(ex({3, 1, 0}), Rational(4));
  coord4.add_term(ex({2, 0, 1}), Rational(6));
  CHECK(c42.coords[4] == coord4);

  // Setting every l_s = 0 must collapse any chart onto the curve itself.
  for (int j = 0; j <= 4; ++j) {
    const std::vector<Rational> pt = chart_point(c42, Rational(3), {Rational(0), Rational(0)});
    Int power(1);
    for (int f = 0; f < j; ++f) power *= 3;
    CHECK(pt[j] == Rational(power));
  }

  CHECK_THROWS_AS(chart(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(chart(4, -1), std::invalid_argument);
}

TEST_CASE("chart point evaluation") {
  const OsculatingChart c = chart(3, 1);
  const std::vector<Rational> pt = chart_point(c, Rational(2), {Rational(1, 2)});
  // (1, t + l, t^2 + 2lt, t^3 + 3lt^2) at t = 2, l = 1/2.
  CHECK(pt[0] == 1);
  CHECK(pt[1] == Rational(5, 2));
  CHECK(pt[2] == 6);
  CHECK(pt[3] == 14);
  CHECK_THROWS_AS(chart_point(c, Rational(1), {}), std::invalid_argument);
}

TEST_CASE("symbolic substitution of forms into charts") {
  // The conic x_0 x_2 - x_1^2 vanishes identically on the curve chart.
  const FormFamily conic = extend_recursive(build_q0(make_params(2, 1), Rational(1)));
  CHECK(substitute(conic.forms[0], chart(2, 0)).is_zero());

  // (4, 2): forms vanish on the tangent chart (p = 1 = m - 1), not on p = 2.
  const FormFamily f42 = extend_recursive(build_q0(make_params(4, 2), Rational(1)));
  CHECK(substitute(f42.forms[0], chart(4, 1)).is_zero());
  CHECK(!substitute(f42.forms[0], chart(4, 2)).is_zero());

  CHECK_THROWS_AS(substitute(f42.forms[0], chart(5, 1)), std::invalid_argument);
}

TEST_CASE("containment separates consecutive osculating varieties") {
  const FormFamily f52 = extend_recursive(build_q0(make_params(5, 2), Rational(3)));
  CHECK(contains_osculating(f52, 1));
  CHECK(!contains_osculating(f52, 2));

  const FormFamily f21 = extend_recursive(build_q0(make_params(2, 1), Rational(1)));
  CHECK(contains_osculating(f21, 0));

  CHECK_THROWS_AS(contains_osculating(f52, 6), std::invalid_argument);
}

TEST_CASE("containment verdicts are invariant under the chart rescaling") {
  for (int r = 2; r <= 8; ++r) {
    for (int m = 1; 2 * m <= r; ++m) {
      const FormFamily family = extend_recursive(build_q0(make_params(r, m), Rational(1)));
      for (int p = 0; p <= m && p <= r; ++p) {
        const bool via_divided = contains_via(chart(r, p), family);
        const bool via_falling = contains_via(derivative_chart(r, p), family);
        CHECK(via_divided == via_falling);
        CHECK(via_divided == contains_osculating(family, p));
      }
    }
  }
}

TEST_CASE("hilbert polynomials of the osculating varieties") {
  // p = 0: the rational normal curve has H(d) = rd + 1.
  for (int r = 2; r <= 6; ++r)
    CHECK(hilbert_poly(r, 0) == UniPoly({Rational(1), Rational(r)}));

  // p = 1: tangent developable, H(d) = (r-1)d^2 + 2.
  for (int r = 2; r <= 6; ++r)
    CHECK(hilbert_poly(r, 1) == UniPoly({Rational(2), Rational(0), Rational(r - 1)}));

  // Frozen cubic sample: H for (r, p) = (6, 2).
  CHECK(hilbert_poly(6, 2) ==
        UniPoly({Rational(2), Rational(3, 2), Rational(3, 2), Rational(2)}));

  CHECK_THROWS_AS(hilbert_poly(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(hilbert_poly(4, -1), std::invalid_argument);
}

TEST_CASE("dimension and degree extraction from a hilbert polynomial") {
  const DimDeg curve = dim_deg_from_hilbert(hilbert_poly(5, 0));
  CHECK(curve.dimension == 1);
  CHECK(curve.degree == 5);

  const DimDeg tangent = dim_deg_from_hilbert(hilbert_poly(7, 1));
  CHECK(tangent.dimension == 2);
  CHECK(tangent.degree == 12);  // 2! * (r - 1)

  const DimDeg osc2 = dim_deg_from_hilbert(hilbert_poly(6, 2));
  CHECK(osc2.dimension == 3);
  CHECK(osc2.degree == 12);  // 3! * 2

  CHECK_THROWS_AS(dim_deg_from_hilbert(UniPoly()), std::invalid_argument);
  // Leading coefficient 1/3 in degree 1 would force degree 1/3: rejected.
  CHECK_THROWS_AS(dim_deg_from_hilbert(UniPoly({Rational(0), Rational(1, 3)})),
                  std::invalid_argument);
  CHECK_THROWS_AS(dim_deg_from_hilbert(UniPoly({Rational(1), Rational(-2)})),
                  std::invalid_argument);
}
