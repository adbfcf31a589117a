#include "pgl2q/sl2.hpp"

#include <stdexcept>
#include <string>

namespace pgl2q {

Params make_params(int r, int m) {
  if (r < 2) throw std::invalid_argument("make_params: r must be >= 2, got " + std::to_string(r));
  if (m < 0 || 2 * m > r)
    throw std::invalid_argument("make_params: m must satisfy 0 <= m <= r/2, got m=" +
                                std::to_string(m) + " for r=" + std::to_string(r));
  return Params{r, m, 2 * r - 4 * m};
}

ModuleVector zero_vector(const Params& params) {
  return ModuleVector{params, std::vector<Rational>(params.r + 1, Rational(0))};
}

ModuleVector basis_vector(const Params& params, int i) {
  if (i < 0 || i > params.r) throw std::invalid_argument("basis_vector: index out of range");
  ModuleVector v = zero_vector(params);
  v.coords[i] = 1;
  return v;
}

ModuleVector act_Y(const ModuleVector& v) {
  ModuleVector out = zero_vector(v.params);
  for (int i = 0; i + 1 <= v.params.r; ++i) out.coords[i + 1] = (i + 1) * v.coords[i];
  return out;
}

ModuleVector act_X(const ModuleVector& v) {
  ModuleVector out = zero_vector(v.params);
  for (int i = 1; i <= v.params.r; ++i) out.coords[i - 1] = (v.params.r - i + 1) * v.coords[i];
  return out;
}

ModuleVector act_H(const ModuleVector& v) {
  ModuleVector out = zero_vector(v.params);
  for (int i = 0; i <= v.params.r; ++i) out.coords[i] = (v.params.r - 2 * i) * v.coords[i];
  return out;
}

}  // namespace pgl2q
