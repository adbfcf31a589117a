#ifndef PGL2Q_VERONESE_HPP
#define PGL2Q_VERONESE_HPP

#include <vector>

#include "pgl2q/multipoly.hpp"
#include "pgl2q/quadrics.hpp"

namespace pgl2q {

// Affine parametrization of the p-th osculating variety of the degree-r
// rational normal curve: r+1 coordinate polynomials in the variables
// (t, l_1, ..., l_p), variable 0 being t.
struct OsculatingChart {
  int r;
  int p;
  std::vector<MultiPoly> coords;  // exactly r+1, each of arity p+1
};

// coordinate j = t^j + sum_{s=1..p} l_s * C(j, s) * t^(j-s). The divided
// scaling C(j, s) (instead of the falling factorial j!/(j-s)!) spans the same
// osculating plane with smaller coefficients; the equivalence of the two
// scalings is kept as a test. Throws on p outside [0, r].
OsculatingChart chart(int r, int p);

// Exact evaluation of every chart coordinate at t = t_value,
// l_s = lambda_values[s-1]. lambda_values must have exactly p entries.
std::vector<Rational> chart_point(const OsculatingChart& c, const Rational& t_value,
                                  const std::vector<Rational>& lambda_values);

// The exact polynomial q(chart coordinates) in (t, l_1, ..., l_p). Throws on
// ambient dimension mismatch.
MultiPoly substitute(const QuadraticForm& q, const OsculatingChart& c);

// True iff substitute(q_k, chart(r, p)) is identically zero for every k.
// Vanishing is decided symbolically, never by sampling: the affine chart is
// dense in the osculating variety, so a zero polynomial certifies vanishing
// on the closure. Throws on p outside [0, r].
bool contains_osculating(const FormFamily& family, int p);

// Hilbert polynomial of the p-th osculating variety of c_r:
//   (d(r-p)+1) * B_p(d) - (d(r-p+1)-1) * B_{p-1}(d),
// where B_q(d) = prod_{s=1..q}(d+s)/q! expands C(q+d, d) and B_{-1} = 0.
// Throws on p outside [0, r-1].
UniPoly hilbert_poly(int r, int p);

struct DimDeg {
  int dimension;
  Int degree;
};

// dimension = deg(h); degree = deg(h)! * leading coefficient, which must be
// a positive integer (throws otherwise, signalling a malformed polynomial).
DimDeg dim_deg_from_hilbert(const UniPoly& h);

}  // namespace pgl2q

#endif  // PGL2Q_VERONESE_HPP
