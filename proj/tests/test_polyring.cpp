#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "snfmom/poly.hpp"

using namespace snfmom;

namespace {

Poly P(const RingPtr& r, const std::string& s) { return Poly::parse(r, s); }

// Random polynomial over the given variables: up to `maxTerms` terms with
// exponents in [0, maxExp] and coefficients in [-9, 9].
Poly random_poly(std::mt19937_64& rng, const RingPtr& ring,
                 const std::vector<std::string>& vars, int maxTerms = 5,
                 int maxExp = 4) {
  std::uniform_int_distribution<int> nterms(0, maxTerms);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> expd(0, maxExp);
  Poly p = Poly::zero(ring);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Monomial m;
    for (const auto& v : vars) {
      int e = expd(rng);
      if (e > 0) m = m.times(Monomial::of(ring->var(v), e));
    }
    p += Poly::monomial(ring, m, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("parse and print round-trip canonical forms") {
  auto r = Ring::create();
  CHECK(P(r, "q^3 + q^2 + 2*q + 1").to_string() == "q^3 + q^2 + 2*q + 1");
  CHECK(P(r, "1 + 2*q + q^2 + q^3").to_string() == "q^3 + q^2 + 2*q + 1");
  CHECK(P(r, "0").to_string() == "0");
  CHECK(P(r, "5").to_string() == "5");
  CHECK(P(r, "-7").to_string() == "-7");
  CHECK(P(r, "q").to_string() == "q");
  CHECK(P(r, "-q").to_string() == "-q");
  CHECK(P(r, "1 - q^2").to_string() == "-q^2 + 1");
  CHECK(P(r, "3*q - 3*q").to_string() == "0");
  CHECK(P(r, "2q").to_string() == "2*q");  // '*' optional on input
  CHECK(P(r, "x_2_5^3").to_string() == "x_2_5^3");
}

TEST_CASE("term order is graded lex with variables sorted by name") {
  auto r = Ring::create();
  CHECK(P(r, "q + a").to_string() == "a + q");
  CHECK(P(r, "q + a + a*q").to_string() == "a*q + a + q");
  CHECK(P(r, "b^2 + a*c").to_string() == "a*c + b^2");  // deg tie: a before b
  CHECK(P(r, "y*x^2 + x*y^2").to_string() == "x^2*y + x*y^2");
  CHECK(P(r, "3 + q + 11*q^2").to_string() == "11*q^2 + q + 3");
}

TEST_CASE("parse rejects malformed input with a position") {
  auto r = Ring::create();
  CHECK_THROWS_AS(P(r, ""), ParseError);
  CHECK_THROWS_AS(P(r, "q +"), ParseError);
  CHECK_THROWS_AS(P(r, "^2"), ParseError);
  CHECK_THROWS_AS(P(r, "q^"), ParseError);
  CHECK_THROWS_AS(P(r, "2 3"), ParseError);
  CHECK_THROWS_AS(P(r, "q$"), ParseError);
  try {
    P(r, "q + + 1");
  } catch (const ParseError& e) {
    CHECK(e.pos >= 4);
  }
}

TEST_CASE("negative exponents require a Laurent variable") {
  auto plain = Ring::create();
  CHECK_THROWS_AS(P(plain, "q^-1"), LaurentEscape);

  auto r = Ring::create();
  r->laurent_var("b0");
  Poly m = P(r, "b0^-1*l2");
  CHECK(m.to_string() == "b0^-1*l2");
  // unit cancellation: b0 * b0^-1 == 1
  CHECK((P(r, "b0") * P(r, "b0^-1")).is_one());
}

TEST_CASE("ring axioms on random inputs") {
  auto r = Ring::create();
  std::mt19937_64 rng(20260819);
  std::vector<std::string> vars = {"x", "y"};
  for (int i = 0; i < 200; ++i) {
    Poly a = random_poly(rng, r, vars);
    Poly b = random_poly(rng, r, vars);
    Poly c = random_poly(rng, r, vars);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Poly::zero() == a);
    CHECK(a * Poly::constant(1) == a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("exact division inverts multiplication") {
  auto r = Ring::create();
  std::mt19937_64 rng(7);
  std::vector<std::string> vars = {"x", "y", "z"};
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    Poly c = random_poly(rng, r, vars, 4, 3);
    Poly d = random_poly(rng, r, vars, 4, 3);
    if (d.is_zero()) continue;
    Poly p = c * d;
    auto q = p.try_exact_div(d);
    REQUIRE(q.has_value());
    CHECK(*q == c);
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("exact division failures") {
  auto r = Ring::create();
  CHECK_FALSE(P(r, "q + 1").try_exact_div(P(r, "q - 1")).has_value());
  CHECK_FALSE(P(r, "2*q").try_exact_div(P(r, "3")).has_value());
  CHECK_FALSE(P(r, "q").try_exact_div(P(r, "q^2")).has_value());
  CHECK_FALSE(P(r, "x*y + 1").try_exact_div(P(r, "x")).has_value());
  CHECK_THROWS_AS(P(r, "q").exact_div(Poly::zero()), DivisionFailure);
  CHECK(Poly::zero().exact_div(P(r, "q")).is_zero());
  // exact content division
  CHECK(P(r, "4*q^2 + 2*q").exact_div(P(r, "2*q")).to_string() == "2*q + 1");
}

TEST_CASE("Laurent division and inversion") {
  auto r = Ring::create();
  r->laurent_var("q");
  // q / q^2 = q^-1 once q is invertible
  CHECK(P(r, "q").exact_div(P(r, "q^2")).to_string() == "q^-1");
  CHECK(P(r, "q^-2 + q^-1").exact_div(P(r, "q^-2")).to_string() == "q + 1");
  auto inv = P(r, "-q^3").try_invert();
  REQUIRE(inv.has_value());
  CHECK(inv->to_string() == "-q^-3");
  CHECK_FALSE(P(r, "q + 1").try_invert());
  CHECK_FALSE(P(r, "2").try_invert());
  CHECK(Poly::constant(-1).inverse() == Poly::constant(-1));

  auto plain = Ring::create();
  CHECK_FALSE(P(plain, "x").try_invert());  // not Laurent
}

TEST_CASE("substitution is a ring homomorphism") {
  auto r = Ring::create();
  std::mt19937_64 rng(99);
  std::vector<std::string> vars = {"x", "y"};
  Poly img = P(r, "y^2 - 3");
  for (int i = 0; i < 100; ++i) {
    Poly a = random_poly(rng, r, vars);
    Poly b = random_poly(rng, r, vars);
    auto s = [&](const Poly& p) { return p.substitute("x", img); };
    CHECK(s(a + b) == s(a) + s(b));
    CHECK(s(a * b) == s(a) * s(b));
  }
  CHECK(P(r, "x^2 + x").substitute("x", Poly::constant(3)).as_constant() ==
        Int(12));
  // absent variable: unchanged
  CHECK(P(r, "y + 1").substitute("x", img) == P(r, "y + 1"));
}

TEST_CASE("substitution of several variables is simultaneous") {
  auto r = Ring::create();
  Poly p = P(r, "x*y");
  std::map<std::string, Poly> im{{"x", P(r, "y")}, {"y", P(r, "x")}};
  CHECK(p.substitute(im) == P(r, "x*y"));
  Poly q = P(r, "x^2 + y");
  CHECK(q.substitute(im) == P(r, "y^2 + x"));
}

TEST_CASE("substitution into negative powers needs an invertible image") {
  auto r = Ring::create();
  r->laurent_var("b");
  r->laurent_var("q");
  Poly p = P(r, "b^-2 + b");
  CHECK(p.substitute("b", P(r, "q")).to_string() == "q + q^-2");
  CHECK_THROWS_AS(p.substitute("b", P(r, "q + 1")), LaurentEscape);
  CHECK(p.substitute("b", Poly::constant(-1)).to_string() == "0");
}

TEST_CASE("coefficient extraction by one variable") {
  auto r = Ring::create();
  Poly p = P(r, "q*x^2 + x^2 + 3 - x*q");
  auto cs = p.coeffs_in("x");
  REQUIRE(cs.size() == 3);
  CHECK(cs.at(0).to_string() == "3");
  CHECK(cs.at(1).to_string() == "-q");
  CHECK(cs.at(2).to_string() == "q + 1");
  // reassemble
  Poly back = Poly::zero(r);
  for (auto& [e, c] : cs) back += c * Poly::variable(r, "x").pow(e);
  CHECK(back == p);
}

TEST_CASE("univariate gcd via primitive remainder sequences") {
  auto r = Ring::create();
  CHECK(gcd_univariate(P(r, "q^2 - 1"), P(r, "q^2 - 2*q + 1")).to_string() ==
        "q - 1");
  CHECK(gcd_univariate(P(r, "2*q + 2"), P(r, "4*q + 4")).to_string() ==
        "2*q + 2");
  CHECK(gcd_univariate(P(r, "-q"), Poly::zero()).to_string() == "q");
  CHECK(gcd_univariate(Poly::zero(), Poly::zero()).is_zero());
  CHECK(gcd_univariate(Poly::constant(6), Poly::constant(-4)).to_string() ==
        "2");
  CHECK_THROWS_AS(gcd_univariate(P(r, "x*y"), P(r, "x")), MultivariateInput);

  // randomized: g | gcd(g*a, g*b) and gcd | g*a
  std::mt19937_64 rng(123);
  for (int i = 0; i < 60; ++i) {
    Poly g = random_poly(rng, r, {"q"}, 3, 3);
    Poly a = random_poly(rng, r, {"q"}, 3, 3);
    Poly b = random_poly(rng, r, {"q"}, 3, 3);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    Poly d = gcd_univariate(g * a, g * b);
    CHECK(d.try_exact_div(g).has_value());
    CHECK((g * a).try_exact_div(d).has_value());
    CHECK((g * b).try_exact_div(d).has_value());
  }
}

TEST_CASE("gcd of Laurent inputs ignores monomial units") {
  auto r = Ring::create();
  r->laurent_var("q");
  Poly a = P(r, "q^-1 + 1");        // = q^-1 (q + 1)
  Poly b = P(r, "q^3 + q^2");       // = q^2 (q + 1)
  CHECK(gcd_univariate(a, b).to_string() == "q + 1");
}

TEST_CASE("powers and big coefficients") {
  auto r = Ring::create();
  Poly p = P(r, "x + 1");
  CHECK(p.pow(0).is_one());
  CHECK(p.pow(3).to_string() == "x^3 + 3*x^2 + 3*x + 1");
  CHECK_THROWS_AS(p.pow(-1), DivisionFailure);
  r->laurent_var("t");
  CHECK(P(r, "t^2").pow(-3).to_string() == "t^-6");

  Int big("100000000000000000000");
  Poly bp = Poly::constant(big) * P(r, "x");
  CHECK(bp.to_string() == "100000000000000000000*x");
  CHECK(Poly::parse(r, "100000000000000000000*x") == bp);
}

TEST_CASE("mixed-ring operations are rejected") {
  auto r1 = Ring::create();
  auto r2 = Ring::create();
  Poly a = P(r1, "x");
  Poly b = P(r2, "y");
  CHECK_THROWS_AS(a * b, RingMismatch);
  CHECK_THROWS_AS(a + b, RingMismatch);
  // constants carry no ring and combine with anything
  CHECK((a * Poly::constant(2)).to_string() == "2*x");
}

TEST_CASE("numeric evaluation") {
  auto r = Ring::create();
  Poly p = P(r, "z^2 - 3*z + 1");
  CHECK(p.eval_double({{"z", 2.0}}) == doctest::Approx(-1.0));
  // golden ratio squared root of z^2-3z+1: z = (3+sqrt(5))/2
  double z = (3.0 + std::sqrt(5.0)) / 2.0;
  CHECK(p.eval_double({{"z", z}}) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("degree and support queries") {
  auto r = Ring::create();
  r->laurent_var("q");
  Poly p = P(r, "q^3*x - q^-2");
  CHECK(p.degree_in("q") == 3);
  CHECK(p.min_exponent_in("q") == -2);
  CHECK(p.degree_in("x") == 1);
  CHECK(p.total_degree() == 4);
  auto vs = p.variables();
  CHECK(vs == std::set<std::string>{"q", "x"});
  CHECK(P(r, "7").total_degree() == 0);
  CHECK(p.content() == Int(1));
  CHECK(P(r, "6*x + 9").content() == Int(3));
}
