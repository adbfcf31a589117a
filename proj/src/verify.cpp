#include "pgl2q/verify.hpp"

#include <functional>
#include <sstream>

#include "pgl2q/certificates.hpp"
#include "pgl2q/veronese.hpp"

namespace pgl2q {

namespace {

struct Check {
  std::ostringstream& out;
  bool& pass;

  // Prints one summary line; on failure, appends the detail text.
  void line(const std::string& name, bool ok, const std::string& detail) {
    out << (ok ? "ok   " : "FAIL ") << name;
    if (!ok && !detail.empty()) out << " (" << detail << ")";
    out << "\n";
    if (!ok) pass = false;
  }
};

bool vectors_equal(const ModuleVector& a, const ModuleVector& b) {
  return a.coords == b.coords;
}

bool commutators_hold(int r, std::string& detail) {
  const Params params = make_params(r, 0);
  for (int i = 0; i <= r; ++i) {
    const ModuleVector e = basis_vector(params, i);
    // [H,X] = 2X
    ModuleVector lhs = act_H(act_X(e));
    ModuleVector rhs = act_X(act_H(e));
    ModuleVector two_x = act_X(e);
    for (Rational& c : two_x.coords) c *= 2;
    for (int j = 0; j <= r; ++j) rhs.coords[j] += two_x.coords[j];
    if (!vectors_equal(lhs, rhs)) {
      detail = "[H,X] fails at r=" + std::to_string(r) + " basis " + std::to_string(i);
      return false;
    }
    // [H,Y] = -2Y
    lhs = act_H(act_Y(e));
    rhs = act_Y(act_H(e));
    ModuleVector two_y = act_Y(e);
    for (Rational& c : two_y.coords) c *= 2;
    for (int j = 0; j <= r; ++j) rhs.coords[j] -= two_y.coords[j];
    if (!vectors_equal(lhs, rhs)) {
      detail = "[H,Y] fails at r=" + std::to_string(r) + " basis " + std::to_string(i);
      return false;
    }
    // [X,Y] = H
    lhs = act_X(act_Y(e));
    rhs = act_Y(act_X(e));
    ModuleVector h = act_H(e);
    for (int j = 0; j <= r; ++j) rhs.coords[j] += h.coords[j];
    if (!vectors_equal(lhs, rhs)) {
      detail = "[X,Y] fails at r=" + std::to_string(r) + " basis " + std::to_string(i);
      return false;
    }
  }
  return true;
}

std::string cell(const Params& p) {
  return "r=" + std::to_string(p.r) + " m=" + std::to_string(p.m);
}

}  // namespace

VerifySuite run_verification(int r_max) {
  VerifySuite suite;
  std::ostringstream out;
  Check check{out, suite.pass};
  out << "invariant suite, 2 <= r <= " << r_max << "\n";

  {
    bool ok = true;
    std::string detail;
    for (int r = 2; r <= r_max && ok; ++r) ok = commutators_hold(r, detail);
    check.line("operator commutators [H,X]=2X, [H,Y]=-2Y, [X,Y]=H", ok, detail);
  }

  bool routes_ok = true, equiv_ok = true, symmetry_ok = true, ranks_ok = true;
  bool leading_ok = true, xr_ok = true, empty_ok = true, osculating_members_ok = true;
  std::string routes_d, equiv_d, symmetry_d, ranks_d, leading_d, xr_d, empty_d, osc_d;

  for (int r = 2; r <= r_max; ++r) {
    for (int m = 0; 2 * m <= r; ++m) {
      const Params params = make_params(r, m);
      const FormFamily closed = build_closed(params, Rational(1));
      const FormFamily recursive = extend_recursive(build_q0(params, Rational(1)));

      if (routes_ok)
        for (int k = 0; k <= params.n && routes_ok; ++k)
          for (int i = closed.forms[k].support_lo(); i <= closed.forms[k].support_hi(); ++i)
            if (closed.forms[k].coeff(i) != recursive.forms[k].coeff(i)) {
              routes_ok = false;
              routes_d = cell(params) + " k=" + std::to_string(k) + " i=" + std::to_string(i);
              break;
            }

      if (equiv_ok) {
        const EquivarianceReport report = verify_equivariance(closed);
        if (!report.pass()) {
          equiv_ok = false;
          equiv_d = cell(params);
        }
      }

      if (symmetry_ok)
        for (int k = 0; k <= params.n && symmetry_ok; ++k) {
          const QuadraticForm& q = closed.forms[k];
          for (int i = q.support_lo(); i <= q.support_hi(); ++i) {
            if (q.coeff(i) != q.coeff(2 * m + k - i) ||
                coeff_closed(params, k, i, Rational(1)) !=
                    coeff_closed(params, params.n - k, params.r - i, Rational(1))) {
              symmetry_ok = false;
              symmetry_d = cell(params) + " k=" + std::to_string(k) + " i=" + std::to_string(i);
              break;
            }
          }
        }

      if (ranks_ok)
        for (int k = 0; 2 * k <= params.n && ranks_ok; ++k) {
          const int rank_k = form_rank(closed.forms[k]);
          const int rank_mirror = form_rank(closed.forms[params.n - k]);
          if (rank_k != rank_mirror || rank_k > 2 * m + k + 1) {
            ranks_ok = false;
            ranks_d = cell(params) + " k=" + std::to_string(k) + " ranks " +
                      std::to_string(rank_k) + "/" + std::to_string(rank_mirror);
          }
        }

      if (leading_ok)
        for (int k = 0; 2 * k <= params.n && leading_ok; ++k) {
          const Rational value = leading_coefficient(params, k, Rational(1));
          if (value == 0 || value != closed.forms[k].coeff(0)) {
            leading_ok = false;
            leading_d = cell(params) + " k=" + std::to_string(k);
          }
        }
      if (leading_ok && m == 0)
        for (int k = 0; k <= params.n && leading_ok; ++k) {
          const QuadraticForm& q = closed.forms[k];
          for (int i = q.support_lo(); i <= q.support_hi(); ++i)
            if (q.coeff(i) == 0) {
              leading_ok = false;
              leading_d = cell(params) + " vanishing in-support coefficient at k=" +
                          std::to_string(k) + " i=" + std::to_string(i);
              break;
            }
        }

      if (m >= 1 && xr_ok) {
        std::vector<Rational> coords(r + 1, Rational(0));
        coords[r] = 1;
        const AffinePoint xr = make_point(params, coords);
        if (!membership(closed, xr) ||
            rank_exact(jacobian_at(closed, xr)) != r - 2 * m + 1) {
          xr_ok = false;
          xr_d = cell(params);
        }
      }
      if (m == 0 && empty_ok && !empty_certificate_m0(closed)) {
        empty_ok = false;
        empty_d = cell(params);
      }

      if (m >= 1 && osculating_members_ok)
        for (const OsculatingSample& sample : osculating_witnesses(params))
          if (!membership(closed, sample.point)) {
            osculating_members_ok = false;
            osc_d = cell(params) + " t=" + to_string(sample.t);
            break;
          }
    }
  }

  check.line("closed formula = recursion over the full grid", routes_ok, routes_d);
  check.line("equivariance identities (lowering/raising/weight)", equiv_ok, equiv_d);
  check.line("coefficient symmetry and k <-> n-k mirror", symmetry_ok, symmetry_d);
  check.line("rank pairing rank(q_k) = rank(q_{n-k}) <= 2m+k+1", ranks_ok, ranks_d);
  check.line("leading coefficients nonzero (all coefficients for m=0)", leading_ok, leading_d);
  check.line("Jacobian rank r-2m+1 at x_r", xr_ok, xr_d);
  check.line("emptiness certificate for m=0", empty_ok, empty_d);
  check.line("published osculating samples are members", osculating_members_ok, osc_d);

  {
    bool ok = true;
    std::string detail;
    for (int r = 5; r <= std::min(r_max, 23) && ok; r += 2) {
      const Params params = make_params(r, (r - 1) / 2);
      const FormFamily family = build_closed(params, Rational(1));
      const AffinePoint p = special_point(params);
      if (!membership(family, p) || rank_exact(jacobian_at(family, p)) != 3) {
        ok = false;
        detail = cell(params);
      }
    }
    check.line("special-point rank 3 for odd r, m=(r-1)/2", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int r = 8; r <= std::min(r_max, 24) && ok; r += 2) {
      const Params params = make_params(r, r / 2 - 1);
      const FormFamily family = build_closed(params, Rational(1));
      const AffinePoint p = special_point(params);
      if (!membership(family, p) || rank_exact(jacobian_at(family, p)) != 5) {
        ok = false;
        detail = cell(params);
      }
    }
    check.line("special-point rank 5 for even r >= 8, m=r/2-1", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int r = 2; r <= std::min(r_max, 12) && ok; ++r)
      for (int m = 1; 2 * m <= r && ok; ++m) {
        const FormFamily family = build_closed(make_params(r, m), Rational(1));
        for (int p = 0; p <= m - 1 && ok; ++p)
          if (!contains_osculating(family, p)) {
            ok = false;
            detail = cell(family.params) + " p=" + std::to_string(p) + " expected vanishing";
          }
        if (ok && contains_osculating(family, m)) {
          ok = false;
          detail = cell(family.params) + " p=" + std::to_string(m) + " expected nonvanishing";
        }
      }
    check.line("osculating containment up to p=m-1, none at p=m (r <= 12)", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int r = 2; r <= std::min(r_max, 20) && ok; ++r)
      for (int p = 0; p < r && ok; ++p) {
        const DimDeg dd = dim_deg_from_hilbert(hilbert_poly(r, p));
        if (dd.dimension != p + 1 || (p == 0 && dd.degree != r) ||
            (p == 1 && dd.degree != 2 * (r - 1))) {
          ok = false;
          detail = "r=" + std::to_string(r) + " p=" + std::to_string(p);
        }
      }
    check.line("Hilbert polynomial dimension p+1, degrees r and 2(r-1) (r <= 20)", ok, detail);
  }

  out << (suite.pass ? "all checks passed\n" : "FAILURES detected\n");
  suite.report = out.str();
  return suite;
}

}  // namespace pgl2q
