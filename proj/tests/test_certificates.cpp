#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "pgl2q/certificates.hpp"
#include "pgl2q/veronese.hpp"

using namespace pgl2q;

namespace {

AffinePoint point_of(const Params& p, std::vector<long> entries) {
  std::vector<Rational> coords;
  coords.reserve(entries.size());
  for (long e : entries) coords.emplace_back(e);
  return make_point(p, std::move(coords));
}

AffinePoint last_basis_point(const Params& p) {
  std::vector<Rational> coords(p.r + 1, Rational(0));
  coords.back() = 1;
  return make_point(p, std::move(coords));
}

}  // namespace

TEST_CASE("jacobian assembly at distinguished points") {
  const Params p62 = make_params(6, 2);
  const FormFamily family = extend_recursive(build_q0(p62, Rational(1)));

  // At x_r only antidiagonals containing index r contribute: b_i with
  // 2m + k - i = r, one entry per k with i = 2m + k - r in support.
  const ExactMatrix at_xr = jacobian_at(family, last_basis_point(p62));
  CHECK(at_xr.rows() == p62.n + 1);
  CHECK(at_xr.cols() == p62.r + 1);
  int nonzeros = 0;
  for (int k = 0; k <= p62.n; ++k) {
    int row_nonzeros = 0;
    int col = -1;
    for (int i = 0; i <= p62.r; ++i)
      if (at_xr.at(k, i) != 0) {
        ++row_nonzeros;
        col = i;
      }
    nonzeros += row_nonzeros;
    // For k = 2, 3, 4 the index 2m + k - r = k - 2 is in support.
    if (k >= 2) {
      CHECK(row_nonzeros == 1);
      CHECK(col == k - 2);
    } else {
      CHECK(row_nonzeros == 0);
    }
  }
  CHECK(nonzeros == 3);
  CHECK(rank_exact(at_xr) == p62.r - 2 * p62.m + 1);

  const ExactMatrix at_zero = jacobian_at(family, point_of(p62, {0, 0, 0, 0, 0, 0, 0}));
  for (int k = 0; k < at_zero.rows(); ++k)
    for (int i = 0; i < at_zero.cols(); ++i) CHECK(at_zero.at(k, i) == 0);

  const Params p52 = make_params(5, 2);
  const FormFamily f52 = extend_recursive(build_q0(p52, Rational(1)));
  CHECK(rank_exact(jacobian_at(f52, point_of(p52, {1, 1, 0, 0, 0, 0}))) == 3);

  CHECK_THROWS_AS(jacobian_at(family, point_of(p52, {1, 0, 0, 0, 0, 0})),
                  std::invalid_argument);
}

TEST_CASE("membership of the closed orbit point") {
  for (int r = 2; r <= 12; ++r) {
    for (int m = 0; 2 * m <= r; ++m) {
      const Params p = make_params(r, m);
      const FormFamily family = extend_recursive(build_q0(p, Rational(1)));
      const bool member = membership(family, last_basis_point(p));
      // q_k(x_r) is nonzero only on the antidiagonal 2m + k = 2r, i.e.
      // k = n + 2m. That k exists inside [0, n] exactly when m = 0, where
      // q_n(x_r) = lambda != 0. Hence x_r is a member iff m >= 1.
      CHECK(member == (m >= 1));
    }
  }
}

TEST_CASE("special point construction") {
  const Params p52 = make_params(5, 2);
  const AffinePoint sp = special_point(p52);
  CHECK(sp.coords == point_of(p52, {1, 1, 0, 0, 0, 0}).coords);

  const Params p83 = make_params(8, 3);
  const AffinePoint sp83 = special_point(p83);
  CHECK(sp83.coords == point_of(p83, {1, 0, 1, 0, 0, 0, 0, 0, 0}).coords);

  CHECK_THROWS_AS(special_point(make_params(3, 1)), std::invalid_argument);
  CHECK_THROWS_AS(special_point(make_params(4, 0)), std::invalid_argument);

  // The special point is a member at both parities.
  const FormFamily f52 = extend_recursive(build_q0(p52, Rational(1)));
  CHECK(membership(f52, sp));
  const FormFamily f83 = extend_recursive(build_q0(p83, Rational(1)));
  CHECK(membership(f83, sp83));

  // Frozen ranks: 3 on the odd-r critical cell, 5 on the even-r one.
  CHECK(rank_exact(jacobian_at(f52, sp)) == 3);
  CHECK(rank_exact(jacobian_at(f83, sp83)) == 5);
}

TEST_CASE("emptiness certificate for the untwisted family") {
  const FormFamily f30 = extend_recursive(build_q0(make_params(3, 0), Rational(1)));
  CHECK(empty_certificate_m0(f30));
  const FormFamily f100 = extend_recursive(build_q0(make_params(10, 0), Rational(-2)));
  CHECK(empty_certificate_m0(f100));

  const FormFamily f21 = extend_recursive(build_q0(make_params(2, 1), Rational(1)));
  CHECK_THROWS_AS(empty_certificate_m0(f21), std::invalid_argument);
}

TEST_CASE("published osculating witness list") {
  const Params p52 = make_params(5, 2);
  const std::vector<OsculatingSample> samples = osculating_witnesses(p52);
  REQUIRE(samples.size() == 3);

  CHECK(samples[0].t == 1);
  CHECK(samples[1].t == 2);
  CHECK(samples[2].t == 3);

  // m = 2 means one chart parameter l_1, cycling 1, -1, 1/2 with the sample.
  REQUIRE(samples[0].lambdas.size() == 1);
  CHECK(samples[0].lambdas[0] == 1);
  CHECK(samples[1].lambdas[0] == -1);
  CHECK(samples[2].lambdas[0] == Rational(1, 2));

  // Every sample is a point of the chart, a member, and has a_r != 0.
  const FormFamily family = extend_recursive(build_q0(p52, Rational(1)));
  const OsculatingChart c = chart(5, 1);
  for (const OsculatingSample& s : samples) {
    CHECK(s.point.coords == chart_point(c, s.t, s.lambdas));
    CHECK(membership(family, s.point));
    CHECK(s.point.coords.back() != 0);
  }

  // m = 3: three chart parameters, shifted cycle per sample.
  const std::vector<OsculatingSample> deep = osculating_witnesses(make_params(8, 3));
  REQUIRE(deep.size() == 3);
  REQUIRE(deep[0].lambdas.size() == 2);
  CHECK(deep[0].lambdas == std::vector<Rational>{Rational(1), Rational(-1)});
  CHECK(deep[1].lambdas == std::vector<Rational>{Rational(-1), Rational(1, 2)});
  CHECK(deep[2].lambdas == std::vector<Rational>{Rational(1, 2), Rational(1)});

  CHECK_THROWS_AS(osculating_witnesses(make_params(4, 0)), std::invalid_argument);
}

TEST_CASE("certificates for the frozen parameter cells") {
  const CertificateReport c52 = certify(make_params(5, 2));
  REQUIRE(c52.codim_lower.has_value());
  CHECK(*c52.codim_lower == 3);
  CHECK(*c52.dim_upper == 2);
  REQUIRE(c52.dim_lower.has_value());
  CHECK(*c52.dim_lower == 2);
  REQUIRE(c52.degree_claim.has_value());
  CHECK(*c52.degree_claim == 8);
  CHECK(!c52.empty_certificate);
  CHECK(c52.witnesses.size() >= 2);
  CHECK(c52.witnesses[0].label == "x_5");
  for (const Witness& w : c52.witnesses) CHECK(w.member);

  const CertificateReport c83 = certify(make_params(8, 3));
  CHECK(*c83.codim_lower == 5);
  CHECK(*c83.dim_upper == 3);
  CHECK(*c83.dim_lower == 3);
  REQUIRE(c83.degree_claim.has_value());
  CHECK(*c83.degree_claim == 32);

  // Hypersurface cell: n + 1 = 1 equation, rank 1 at x_r.
  const CertificateReport c42 = certify(make_params(4, 2));
  CHECK(*c42.codim_lower == 1);
  CHECK(*c42.dim_upper == 3);
  REQUIRE(c42.degree_claim.has_value());
  CHECK(*c42.degree_claim == 2);

  const CertificateReport c94 = certify(make_params(9, 4));
  CHECK(*c94.codim_lower == 3);
  REQUIRE(c94.degree_claim.has_value());
  CHECK(*c94.degree_claim == 8);

  // (6, 2): n + 1 = 5 equations but the best witness rank is 3; the complete
  // intersection claim must stay absent.
  const CertificateReport c62 = certify(make_params(6, 2));
  CHECK(*c62.codim_lower == 3);
  CHECK(*c62.dim_upper == 3);
  CHECK(!c62.degree_claim.has_value());

  // m = 0: emptiness route, no dimension data.
  const CertificateReport c60 = certify(make_params(6, 0));
  CHECK(c60.empty_certificate);
  CHECK(!c60.codim_lower.has_value());
  CHECK(!c60.dim_upper.has_value());
  CHECK(!c60.dim_lower.has_value());
  CHECK(!c60.degree_claim.has_value());
}
