#include "pgl2q/certificates.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "pgl2q/veronese.hpp"

namespace pgl2q {

ExactMatrix jacobian_at(const FormFamily& family, const AffinePoint& point) {
  if (!(family.params == point.params))
    throw std::invalid_argument("jacobian_at: params mismatch between family and point");
  const Params& p = family.params;
  ExactMatrix jac(p.n + 1, p.r + 1);
  for (int k = 0; k <= p.n; ++k) {
    const std::vector<Rational> row = gradient(family.forms[k], point);
    for (int i = 0; i <= p.r; ++i) jac.at(k, i) = row[i];
  }
  return jac;
}

bool membership(const FormFamily& family, const AffinePoint& point) {
  for (const QuadraticForm& q : family.forms)
    if (evaluate(q, point) != 0) return false;
  return true;
}

AffinePoint special_point(const Params& params) {
  if (params.m < 2)
    throw std::invalid_argument(
        "special_point: requires m >= 2 (indices 0 and m-1 collide for m < 2)");
  std::vector<Rational> coords(params.r + 1, Rational(0));
  coords[0] = 1;
  coords[params.m - 1] = 1;
  return make_point(params, std::move(coords));
}

bool empty_certificate_m0(const FormFamily& family) {
  if (family.params.m != 0)
    throw std::invalid_argument("empty_certificate_m0: requires m = 0");
  for (int j = 0; j <= family.params.r; ++j)
    if (family.forms[2 * j].coeff(j) == 0) return false;
  return true;
}

std::vector<OsculatingSample> osculating_witnesses(const Params& params) {
  if (params.m < 1)
    throw std::invalid_argument("osculating_witnesses: requires m >= 1");
  static const Rational cycle[3] = {Rational(1), Rational(-1), make_rational(1, 2)};
  const int p = params.m - 1;
  const OsculatingChart c = chart(params.r, p);
  std::vector<OsculatingSample> samples;
  for (int j = 0; j < 3; ++j) {
    OsculatingSample sample;
    sample.t = Rational(j + 1);
    for (int s = 1; s <= p; ++s) sample.lambdas.push_back(cycle[(s - 1 + j) % 3]);
    std::vector<Rational> coords = chart_point(c, sample.t, sample.lambdas);
    if (coords[params.r] == 0) continue;
    sample.point = make_point(params, std::move(coords));
    samples.push_back(std::move(sample));
  }
  return samples;
}

CertificateReport certify(const Params& params) {
  const FormFamily family = build_closed(params, Rational(1));
  CertificateReport report;
  report.params = params;

  std::vector<std::pair<std::string, AffinePoint>> points;
  {
    std::vector<Rational> coords(params.r + 1, Rational(0));
    coords[params.r] = 1;
    points.emplace_back("x_" + std::to_string(params.r), make_point(params, std::move(coords)));
  }
  if (params.m >= 2) points.emplace_back("special point", special_point(params));
  if (params.m >= 1)
    for (OsculatingSample& sample : osculating_witnesses(params))
      points.emplace_back("osculating sample t=" + to_string(sample.t),
                          std::move(sample.point));

  int max_member_rank = -1;
  for (auto& [label, point] : points) {
    Witness w;
    w.label = std::move(label);
    w.member = membership(family, point);
    w.jacobian_rank = rank_exact(jacobian_at(family, point));
    if (w.member) max_member_rank = std::max(max_member_rank, w.jacobian_rank);
    w.point = std::move(point);
    report.witnesses.push_back(std::move(w));
  }

  if (max_member_rank >= 0) {
    report.codim_lower = max_member_rank;
    report.dim_upper = params.r - max_member_rank;
    if (max_member_rank == params.n + 1) report.degree_claim = Int(1) << (params.n + 1);
  }
  if (params.m >= 1) report.dim_lower = params.m;
  if (params.m == 0) report.empty_certificate = empty_certificate_m0(family);
  return report;
}

}  // namespace pgl2q
