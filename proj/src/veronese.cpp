#include "pgl2q/veronese.hpp"

#include <stdexcept>
#include <string>

namespace pgl2q {

OsculatingChart chart(int r, int p) {
  if (p < 0 || p > r)
    throw std::invalid_argument("chart: p outside [0, r], got p=" + std::to_string(p));
  OsculatingChart c{r, p, {}};
  c.coords.reserve(r + 1);
  const int arity = p + 1;
  for (int j = 0; j <= r; ++j) {
    MultiPoly coord(arity);
    std::vector<int> exps(arity, 0);
    exps[0] = j;
    coord.add_term(exps, Rational(1));
    for (int s = 1; s <= p && s <= j; ++s) {
      std::vector<int> mixed(arity, 0);
      mixed[0] = j - s;
      mixed[s] = 1;
      coord.add_term(mixed, Rational(binom(j, s)));
    }
    c.coords.push_back(std::move(coord));
  }
  return c;
}

std::vector<Rational> chart_point(const OsculatingChart& c, const Rational& t_value,
                                  const std::vector<Rational>& lambda_values) {
  if (static_cast<int>(lambda_values.size()) != c.p)
    throw std::invalid_argument("chart_point: expected " + std::to_string(c.p) +
                                " lambda values");
  std::vector<Rational> values;
  values.reserve(c.p + 1);
  values.push_back(t_value);
  values.insert(values.end(), lambda_values.begin(), lambda_values.end());
  std::vector<Rational> point;
  point.reserve(c.r + 1);
  for (const MultiPoly& coord : c.coords) point.push_back(coord.eval(values));
  return point;
}

MultiPoly substitute(const QuadraticForm& q, const OsculatingChart& c) {
  if (q.params().r != c.r)
    throw std::invalid_argument("substitute: form lives in P^" + std::to_string(q.params().r) +
                                " but chart in P^" + std::to_string(c.r));
  const int diag = 2 * q.params().m + q.k();
  MultiPoly total(c.p + 1);
  for (int i = q.support_lo(); i <= q.support_hi(); ++i)
    total = total + c.coords[i] * c.coords[diag - i] * q.coeff(i);
  return total;
}

bool contains_osculating(const FormFamily& family, int p) {
  const OsculatingChart c = chart(family.params.r, p);
  for (const QuadraticForm& q : family.forms)
    if (!substitute(q, c).is_zero()) return false;
  return true;
}

namespace {

// B_q(d) = prod_{s=1..q}(d+s)/q!, the polynomial expansion of C(q+d, d).
UniPoly binom_shift(int q) {
  UniPoly b(std::vector<Rational>{Rational(1)});
  for (int s = 1; s <= q; ++s)
    b = b * UniPoly(std::vector<Rational>{Rational(s), Rational(1)});
  Int factorial(1);
  for (int s = 2; s <= q; ++s) factorial *= s;
  return b * make_rational(Int(1), factorial);
}

}  // namespace

UniPoly hilbert_poly(int r, int p) {
  if (p < 0 || p >= r)
    throw std::invalid_argument("hilbert_poly: p outside [0, r-1], got p=" + std::to_string(p));
  // first factor (d(r-p)+1), second factor (d(r-p+1)-1)
  UniPoly h = UniPoly(std::vector<Rational>{Rational(1), Rational(r - p)}) * binom_shift(p);
  if (p >= 1)
    h = h - UniPoly(std::vector<Rational>{Rational(-1), Rational(r - p + 1)}) * binom_shift(p - 1);
  return h;
}

DimDeg dim_deg_from_hilbert(const UniPoly& h) {
  if (h.is_zero()) throw std::invalid_argument("dim_deg_from_hilbert: zero polynomial");
  const int dim = h.degree();
  Int factorial(1);
  for (int s = 2; s <= dim; ++s) factorial *= s;
  Rational degree = h.leading() * factorial;
  if (!is_integer(degree) || degree <= 0)
    throw std::invalid_argument("dim_deg_from_hilbert: degree " + to_string(degree) +
                                " is not a positive integer");
  return DimDeg{dim, degree.get_num()};
}

}  // namespace pgl2q
