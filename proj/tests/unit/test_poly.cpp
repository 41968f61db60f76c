#include "catch_poly.hpp"

#include "reflectq/exactalg/poly.hpp"

using namespace reflectq::alg;

namespace {
const Poly q = Poly::var(Var::q);
const Poly z = Poly::var(Var::z);
const Poly x = Poly::var(Var::x);
}  // namespace

TEST_CASE("monomial packing follows graded lex") {
  auto a = Monomial::of(Var::q, 2);
  auto b = Monomial::of(Var::q) * Monomial::of(Var::z);
  auto c = Monomial::of(Var::z, 3);
  CHECK(a > b);
  CHECK(c > a);  // higher total degree wins
  CHECK(Monomial::of(Var::q) > Monomial::of(Var::w, 1));
  CHECK((b / Monomial::of(Var::z)) == Monomial::of(Var::q));
  CHECK(b.degree() == 2);
  CHECK(Monomial::gcd(a, b) == Monomial::of(Var::q));
}

TEST_CASE("polynomial arithmetic and display") {
  Poly a = 1 + q;
  CHECK(a.to_string() == "1 + q");
  CHECK((a * a).to_string() == "1 + 2*q + q^2");
  CHECK((q + z).to_string() == "q + z");
  CHECK((z - q).to_string() == "-q + z");
  CHECK((a - a).is_zero());
  CHECK(Poly(0).to_string() == "0");
  CHECK((-(q * z) + 3).to_string() == "3 - q*z");
  CHECK(pow(a, 5).size() == 6);
}

TEST_CASE("exact division") {
  Poly f = (1 + q + q * z) * (z - 2 * x * q + 5);
  auto d = f.divide_exact(1 + q + q * z);
  REQUIRE(d);
  CHECK(*d == z - 2 * x * q + 5);
  CHECK_FALSE(f.divide_exact(q + 7));
  CHECK_FALSE((q * q + 1).divide_exact(q + 1));
}

TEST_CASE("coefficients and evaluation") {
  Poly f = 3 * q * q * z + q * z - 2 * z + 7;
  auto cs = f.coefficients(Var::q);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == -2 * z + 7);
  CHECK(cs[1] == z);
  CHECK(cs[2] == 3 * z);
  CHECK(f.evaluate_at(Var::q, 2) == 12 * z + 2 * z - 2 * z + 7);
  CHECK(f.degree(Var::q) == 2);
  CHECK(f.min_degree(Var::z) == 0);
}
