#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "snfmom/families.hpp"
#include "snfmom/qfun.hpp"
#include "snfmom/toeplitz.hpp"

using namespace snfmom;

namespace {
Poly pv(const RingPtr& r, const std::string& s) { return Poly::parse(r, s); }
}  // namespace

TEST_CASE("recurrence polynomials in z") {
  RecurrenceSpec spec = symbolic_laurent_spec(5);
  const RingPtr& r = spec.ring;
  auto q0 = q_coeffs(spec, 0);
  REQUIRE(q0.size() == 1);
  CHECK(q0[0].is_one());
  auto q1 = q_coeffs(spec, 1);
  REQUIRE(q1.size() == 2);
  CHECK(q1[0] == pv(r, "-b0"));
  CHECK(q1[1].is_one());
  // q_2 = (z - b1) q_1 - z l1 q_0 = z^2 - (b0 + b1 + l1) z + b0 b1
  auto q2 = q_coeffs(spec, 2);
  REQUIRE(q2.size() == 3);
  CHECK(q2[0] == pv(r, "b0*b1"));
  CHECK(q2[1] == pv(r, "-b0 - b1 - l1"));
  CHECK(q2[2].is_one());
  for (int n = 3; n <= 5; ++n) {
    auto qn = q_coeffs(spec, n);
    REQUIRE(qn.size() == static_cast<std::size_t>(n) + 1);
    CHECK(qn.back().is_one());
  }
}

TEST_CASE("partner polynomials are monic with unit-cleared coefficients") {
  RecurrenceSpec spec = symbolic_laurent_spec(5);
  const RingPtr& r = spec.ring;
  auto p0 = partner_coeffs(spec, 0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].is_one());
  // p_1 = z - (b1 + l1)/(b0 b1)
  auto p1 = partner_coeffs(spec, 1);
  REQUIRE(p1.size() == 2);
  CHECK(p1[1].is_one());
  CHECK(p1[0] * pv(r, "b0*b1") == pv(r, "-b1 - l1"));
  for (int m = 2; m <= 4; ++m) {
    auto pm = partner_coeffs(spec, m);
    REQUIRE(pm.size() == static_cast<std::size_t>(m) + 1);
    CHECK(pm.back().is_one());
  }
}

TEST_CASE("two-sided moments at pinned values") {
  RecurrenceSpec spec = symbolic_laurent_spec(6);
  const RingPtr& r = spec.ring;
  ToeplitzFunctional fn(spec);
  CHECK(fn.moment(0).is_one());
  CHECK(fn.moment(1) == pv(r, "b0^-1 + l1*b0^-1*b1^-1"));
  CHECK(fn.moment(-1) == pv(r, "b0"));
  CHECK(fn.moment(-2) == pv(r, "b0^2 + b0*l1"));
}

TEST_CASE("path weights of two explicit step sequences") {
  RecurrenceSpec spec = symbolic_laurent_spec(3);
  const RingPtr& r = spec.ring;
  CHECK(schroder_path_weight(spec, "ENNSS", true) == pv(r, "b0*l1*l2"));
  CHECK(schroder_path_weight(spec, "NENSS", false) ==
        pv(r, "l1*l2*b0^-1*b1^-3*b2^-1"));
  CHECK(schroder_path_weight(spec, "", true).is_one());
  CHECK_THROWS_AS(schroder_path_weight(spec, "S", true), PolyError);
  CHECK_THROWS_AS(schroder_path_weight(spec, "N", true), PolyError);
}

TEST_CASE("enumeration agrees with the recursive moments") {
  RecurrenceSpec spec = symbolic_laurent_spec(4);
  ToeplitzFunctional fn(spec);
  for (int n = -4; n <= 4; ++n) {
    CHECK_MESSAGE(fn.moment(n) == schroder_moment_oracle(spec, n),
                  "moment ", n);
  }
}

TEST_CASE("biorthogonality of the two polynomial sequences") {
  RecurrenceSpec spec = symbolic_laurent_spec(4);
  ToeplitzFunctional fn(spec);
  VerificationReport rep = verify_biorthogonality(fn, 3);
  CHECK_MESSAGE(rep.match, rep.witness);
}

TEST_CASE("symbolic Toeplitz matrix carries the alternating diagonal") {
  RecurrenceSpec spec = symbolic_laurent_spec(4);
  const RingPtr& r = spec.ring;
  auto d = toeplitz_claimed_diagonal(spec, 2);
  REQUIRE(d.size() == 3);
  CHECK(d[0].is_one());
  CHECK(d[1] == pv(r, "-l1*b1^-1"));
  CHECK(d[2] == pv(r, "l1*l2*b1^-1*b2^-1"));

  ToeplitzFunctional fn(spec);
  VerificationReport rep = verify_toeplitz_snf(fn, 3);
  CHECK_MESSAGE(rep.match, rep.witness);
}

TEST_CASE("level-free weight systems have no two-sided moments") {
  RecurrenceSpec spec = family_spec(Family::catalan);
  ToeplitzFunctional fn(spec);
  CHECK_THROWS_AS(fn.moment(1), DivisionFailure);
}

TEST_CASE("q-weighted Schroder moments") {
  RecurrenceSpec spec = schroeder_spec();
  const RingPtr& r = spec.ring;
  ToeplitzFunctional fn(spec);
  // mu_n = R_n(q), mu_{-n} = R_{n-1}(q)
  for (int n = 0; n <= 8; ++n) {
    CHECK(fn.moment(n) == q_schroeder(r, n));
    if (n >= 1) CHECK(fn.moment(-n) == q_schroeder(r, n - 1));
  }
  CHECK(fn.moment(2).to_string() == "q + 5");
  CHECK(q_schroeder(r, 2).substitute("q", Poly::constant(1, r)) ==
        Poly::constant(6, r));
  for (int n = -6; n <= 6; ++n) {
    CHECK(fn.moment(n) == schroder_moment_oracle(spec, n));
  }
}

TEST_CASE("the two-sided Schroder matrix is Hankel-like in the path counts") {
  RecurrenceSpec spec = schroeder_spec();
  ToeplitzFunctional fn(spec);
  PolyMatrix t = toeplitz_matrix(fn, 5);
  PolyMatrix cross = schroeder_cross_matrix(spec.ring, 5);
  CHECK(t == cross);

  VerificationReport rep = verify_toeplitz_snf(fn, 6);
  CHECK_MESSAGE(rep.match, rep.witness);
  // diagonal entries alternate in sign with q-binomial exponents
  auto d = toeplitz_claimed_diagonal(spec, 6);
  for (int k = 0; k <= 6; ++k) {
    Poly want = Poly::monomial(
        spec.ring, Monomial::of(spec.ring->var("q"), k * (k - 1) / 2),
        k % 2 == 0 ? 1 : -1);
    CHECK(d[static_cast<std::size_t>(k)] == want);
  }
}
