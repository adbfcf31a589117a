#ifndef PGL2Q_VERIFY_HPP
#define PGL2Q_VERIFY_HPP

#include <string>

namespace pgl2q {

struct VerifySuite {
  bool pass = true;
  std::string report;
};

// Exhaustive exact-identity suite over the grid 2 <= r <= r_max,
// 0 <= m <= floor(r/2):
//   - operator commutator identities on every basis vector
//   - closed-formula family = recursive family, coefficient-for-coefficient
//   - the three equivariance identities
//   - coefficient symmetry and the mirror identity between k and n-k
//   - rank pairing rank(q_k) = rank(q_{n-k}) <= 2m+k+1
//   - leading coefficients nonzero for k <= n/2 (all in-support coefficients
//     nonzero when m = 0)
//   - Jacobian rank r-2m+1 at x_r (m >= 1); emptiness certificate (m = 0)
//   - special-point ranks 3 (odd r >= 5, m = (r-1)/2) and 5 (even r >= 8,
//     m = r/2-1)
//   - membership of every published osculating sample (m >= 1)
//   - osculating containment up to p = m-1 and non-containment at p = m
//     (capped at r <= 12)
//   - Hilbert polynomial dimension p+1 and the degree values at p = 0, 1
//     (capped at r <= 20)
// Reports one line per check group; pass = no failures anywhere.
VerifySuite run_verification(int r_max);

}  // namespace pgl2q

#endif  // PGL2Q_VERIFY_HPP
