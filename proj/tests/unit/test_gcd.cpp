#include "catch_poly.hpp"

#include <random>

#include "reflectq/exactalg/gcd.hpp"

using namespace reflectq::alg;

namespace {
const Poly q = Poly::var(Var::q);
const Poly z = Poly::var(Var::z);
const Poly x = Poly::var(Var::x);
const Poly y = Poly::var(Var::y);

Poly random_poly(std::mt19937& rng, int terms, int deg) {
  std::uniform_int_distribution<int> c(-9, 9);
  std::uniform_int_distribution<int> e(0, deg);
  Poly p;
  for (int i = 0; i < terms; ++i) p += Poly(c(rng)) * pow(q, e(rng)) * pow(z, e(rng)) * pow(x, e(rng) / 2);
  return p;
}

void check_gcd(const Poly& a, const Poly& b, const Poly& expected) {
  auto r = gcd_cofactors(a, b);
  CHECK(r.gcd == expected);
  CHECK(r.gcd * r.cof_a == a);
  CHECK(r.gcd * r.cof_b == b);
}
}  // namespace

TEST_CASE("gcd of hand-built products") {
  Poly g = 1 + q * z - 3 * q * q;
  check_gcd(g * (q + z), g * (q - z + 2), -g);  // leading term -3q^2 is made positive
  check_gcd(2 * q * q * (1 + q), 6 * q * (1 - q * q), 2 * q * (1 + q));
  check_gcd(q + z, q + x, Poly(1));
  check_gcd(Poly(0), -(q + 1), q + 1);
  check_gcd(-(q + 1), -(q + 1), q + 1);
  check_gcd(Poly(12), Poly(18), Poly(6));
  check_gcd(pow(1 - q, 4) * pow(1 + z, 2), pow(1 - q, 2) * (1 + z) * (q - z), pow(1 - q, 2) * (1 + z));
}

TEST_CASE("gcd property: planted common factor is recovered") {
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    Poly g = random_poly(rng, 3, 3);
    Poly a = random_poly(rng, 4, 3);
    Poly b = random_poly(rng, 4, 3);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    auto r = gcd_cofactors(g * a, g * b);
    CHECK(r.gcd * r.cof_a == g * a);
    CHECK(r.gcd * r.cof_b == g * b);
    CHECK(r.gcd.divide_exact(g));
    CHECK(gcd(r.cof_a, r.cof_b).is_one());
  }
}

TEST_CASE("fallback PRS agrees with the heuristic") {
  Poly g = 1 + q * z + y;
  Poly a = g * (q * q - z);
  Poly b = g * (1 + x * q);
  Poly h = detail::prs_gcd(a, b);
  CHECK(h == g);
  auto r = detail::heuristic_gcd(a, b);
  REQUIRE(r);
  CHECK(r->gcd == g);
  CHECK(detail::modular_coprime(q * q - z, 1 + x * q));
  CHECK_FALSE(detail::modular_coprime(a, b));
}
