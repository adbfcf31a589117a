#ifndef PGL2Q_SL2_HPP
#define PGL2Q_SL2_HPP

#include <vector>

#include "pgl2q/rational.hpp"

namespace pgl2q {

// Parameter triple fixing the ambient space P^r and the equivariant
// projection target S^n(C^2), n = 2r - 4m.
struct Params {
  int r;  // symmetric power, r >= 2
  int m;  // projection index, 0 <= m <= r/2
  int n;  // 2r - 4m, even and >= 0

  friend bool operator==(const Params&, const Params&) = default;
};

// Validates r >= 2, 0 <= m <= floor(r/2) and fills in n. Throws
// std::invalid_argument otherwise.
Params make_params(int r, int m);

// Element of S^r(C^2) over the weight basis x_0..x_r, where x_i = Y^i x_0 / i!.
// coords has exactly r+1 entries.
struct ModuleVector {
  Params params;
  std::vector<Rational> coords;
};

ModuleVector zero_vector(const Params& params);
ModuleVector basis_vector(const Params& params, int i);

// Lowering operator: Y.x_i = (i+1) x_{i+1}, x_r maps to 0.
ModuleVector act_Y(const ModuleVector& v);
// Raising operator: X.x_i = (r-i+1) x_{i-1}, x_0 maps to 0.
ModuleVector act_X(const ModuleVector& v);
// Weight operator: H.x_i = (r-2i) x_i.
ModuleVector act_H(const ModuleVector& v);

}  // namespace pgl2q

#endif
