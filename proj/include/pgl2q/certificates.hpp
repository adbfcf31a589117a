#ifndef PGL2Q_CERTIFICATES_HPP
#define PGL2Q_CERTIFICATES_HPP

#include <optional>
#include <string>
#include <vector>

#include "pgl2q/matrix.hpp"
#include "pgl2q/quadrics.hpp"

namespace pgl2q {

// One witness evaluation inside a certificate: the point, whether all forms
// vanish there, and the exact rank of the Jacobian at the point.
struct Witness {
  std::string label;
  AffinePoint point;
  bool member = false;
  int jacobian_rank = 0;
};

// Dimension/degree certificate for one (r, m) cell, built from exact ranks
// at a deterministic witness list. Members bound the variety's dimension:
// every irreducible component through a witness has codimension at least the
// Jacobian rank there (Zariski tangent space containment); the closed orbit
// of x_r lies in every component, so the x_r bound is global.
struct CertificateReport {
  Params params;
  std::vector<Witness> witnesses;
  // max Jacobian rank over member witnesses; absent when no witness is a
  // member (only happens for m = 0, where the variety is empty)
  std::optional<int> codim_lower;
  std::optional<int> dim_upper;  // r - codim_lower
  std::optional<int> dim_lower;  // m, from osculating containment; m >= 1 only
  // 2^(n+1), present only when codim_lower = n+1: rank equal to the number of
  // defining quadrics certifies a complete intersection, whose degree is the
  // product of the equation degrees
  std::optional<Int> degree_claim;
  bool empty_certificate = false;  // m = 0 triangular elimination succeeded
};

// (n+1) x (r+1) Jacobian: entry (k, i) = 2 b_i^k a_{2m+k-i} (0 out of
// support). Throws on params mismatch.
ExactMatrix jacobian_at(const FormFamily& family, const AffinePoint& point);

// True iff every form of the family vanishes at the point.
bool membership(const FormFamily& family, const AffinePoint& point);

// The point with a_0 = a_{m-1} = 1 and all other coordinates 0. Throws for
// m < 2, where the two indices collide and the construction degenerates.
AffinePoint special_point(const Params& params);

// m = 0 emptiness certificate by triangular elimination: for j = 0..r the
// restriction of q_{2j} to a_0 = ... = a_{j-1} = 0 is b_j^{2j} a_j^2, so
// b_j^{2j} != 0 for all j forces every coordinate of a common zero to vanish.
// Returns true iff all r+1 pivots are nonzero. Throws when m != 0.
bool empty_certificate_m0(const FormFamily& family);

// Deterministic samples on the (m-1)-osculating chart, for m >= 1 (throws
// otherwise). Published sampling scheme: tangency parameters t = 1, 2, 3 in
// ascending order (sample index j = 0, 1, 2); chart parameters
// l_s = cycle[(s - 1 + j) mod 3] with cycle = (1, -1, 1/2); a sample is
// dropped if its last coordinate a_r is 0 (rank certificates require points
// off that hyperplane).
struct OsculatingSample {
  Rational t;
  std::vector<Rational> lambdas;
  AffinePoint point;
};

std::vector<OsculatingSample> osculating_witnesses(const Params& params);

// Builds the family at lambda = 1, evaluates membership and Jacobian rank at
// the witness list {x_r} + {special point if m >= 2} + published osculating
// samples (m >= 1), and assembles the dimension bounds and, when rank n+1 is
// attained, the complete-intersection degree claim. For m = 0 it instead
// runs the emptiness certificate.
CertificateReport certify(const Params& params);

}  // namespace pgl2q

#endif  // PGL2Q_CERTIFICATES_HPP
