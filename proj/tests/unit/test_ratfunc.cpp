#include <random>

#include "catch_poly.hpp"
#include "reflectq/exactalg/qcalc.hpp"
#include "reflectq/exactalg/series.hpp"

using namespace reflectq::alg;

namespace {
const RatFunc q = RatFunc::var(Var::q);
const RatFunc z = RatFunc::var(Var::z);
const RatFunc x = RatFunc::var(Var::x);
const RatFunc y = RatFunc::var(Var::y);
const RatFunc p = RatFunc::var(Var::p);
const RatFunc w = RatFunc::var(Var::w);

RatFunc random_ratfunc(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-4, 4);
  std::uniform_int_distribution<int> e(0, 2);
  auto rp = [&] {
    RatFunc r;
    for (int i = 0; i < 3; ++i) r += RatFunc(c(rng)) * pow(q, e(rng)) * pow(z, e(rng));
    return r;
  };
  RatFunc d = rp();
  while (d.is_zero()) d = rp();
  return rp() / d;
}
}  // namespace

TEST_CASE("rational arithmetic is canonical") {
  RatFunc a = q / (1 - q) + 1 / (1 - q);
  CHECK(a.to_string() == "num: -1 - q; den: -1 + q");
  CHECK(x * (1 / x) == RatFunc(1));
  RatFunc b = RatFunc::fraction((1 - q * q).num(), (1 - q).num());
  CHECK(b == 1 + q);
  CHECK(b.is_polynomial());
  CHECK_THROWS_AS(q / RatFunc(0), reflectq::Error);
  CHECK((q / (q + z)).to_string() == "num: q; den: q + z");
}

TEST_CASE("canonicality across association orders") {
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    RatFunc f = random_ratfunc(rng), g = random_ratfunc(rng), h = random_ratfunc(rng);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    if (!g.is_zero()) CHECK((f / g) * g == f);
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("substitution") {
  RatFunc f = 1 / (q + z);
  auto g = substitute(f, {{Var::z, 1 / (x * y)}});
  CHECK(g == x * y / (q * x * y + 1));
  CHECK(substitute(q * q, {{Var::q, -p * p}}) == pow(p, 4));
  RatFunc h = (q + 2 * z) / (1 - q * z * z);
  CHECK(substitute(h, {}) == h);
  auto swapped = substitute(h, {{Var::q, z}, {Var::z, q}});
  CHECK(swapped == (z + 2 * q) / (1 - z * q * q));
  CHECK(substitute(swapped, {{Var::q, z}, {Var::z, q}}) == h);
  CHECK_THROWS_AS(substitute(1 / (q - z), {{Var::q, z}}), reflectq::Error);
}

TEST_CASE("lowest order extraction") {
  auto a = lowest_order((q * q + q * q * q) / (1 - q), Var::q);
  CHECK(a.order == 2);
  CHECK(a.leading == RatFunc(1));
  auto b = lowest_order(z / (q + z), Var::q);
  CHECK(b.order == 0);
  CHECK(b.leading == RatFunc(1));
  auto c = lowest_order(q / (q * q * (1 + z)), Var::q);
  CHECK(c.order == -1);
  CHECK(c.leading == 1 / (1 + z));
  CHECK_THROWS_AS(lowest_order(RatFunc(0), Var::q), reflectq::Error);

  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    RatFunc f = random_ratfunc(rng), g = random_ratfunc(rng);
    if (f.is_zero() || g.is_zero()) continue;
    auto lf = lowest_order(f, Var::q), lg = lowest_order(g, Var::q), lfg = lowest_order(f * g, Var::q);
    CHECK(lfg.order == lf.order + lg.order);
    CHECK(lfg.leading == lf.leading * lg.leading);
  }
}

TEST_CASE("q-calculus helpers") {
  CHECK(qnumber(2) == (q * q + 1) / q);
  CHECK(qnumber(-3) == -qnumber(3));
  CHECK(qnumber(0).is_zero());
  CHECK(pochhammer(-q, q, 2) == (1 + q) * (1 + q * q));
  CHECK(qbinomial(2, 1, q) == 1 + q);
  CHECK(qbinomial(4, 2, q * q) == pochhammer(q * q, q * q, 4) / pow(pochhammer(q * q, q * q, 2), 2));
  CHECK(qbinomial(3, 5, q).is_zero());
  CHECK_THROWS_AS(pochhammer(z, q, -1), reflectq::Error);
  for (int m = 0; m < 6; ++m) {
    CHECK(pochhammer(z, q, m + 1) == pochhammer(z, q, m) * (1 - z * pow(q, m)));
  }
  CHECK(qfactorial(3) == qnumber(2) * qnumber(3));
}

TEST_CASE("power series") {
  auto a = PowerSeries::expand(1 + w, Var::w, 2);
  auto b = PowerSeries::expand(1 - w, Var::w, 2);
  CHECK((a * b) == PowerSeries::expand(1 - w * w, Var::w, 2));
  auto g = PowerSeries::expand(1 / (1 - w), Var::w, 3);
  for (int k = 0; k <= 3; ++k) CHECK(g[k] == RatFunc(1));
  CHECK_THROWS_AS(a * PowerSeries::expand(1 + z, Var::z, 2), reflectq::Error);

  // Product of two 2phi1 truncations against a direct double-sum convolution.
  const int order = 6;
  auto phi = [&](const RatFunc& A, const RatFunc& B, const RatFunc& C) {
    PowerSeries s(Var::w, order);
    for (int m = 0; m <= order; ++m)
      s[m] = pochhammer(A, q, m) * pochhammer(B, q, m) / (pochhammer(q, q, m) * pochhammer(C, q, m));
    return s;
  };
  auto s1 = phi(z, q * z, q * q * q);
  auto s2 = phi(q * q, z * z, -q);
  auto prod = s1 * s2;
  for (int n = 0; n <= order; ++n) {
    RatFunc direct;
    for (int i = 0; i <= n; ++i) direct += s1[i] * s2[n - i];
    CHECK(prod[n] == direct);
  }
  // And against the expansion of a closed form: (1 - q w)^{-1} (1 + z w).
  auto lhs = PowerSeries::expand(1 / (1 - q * w), Var::w, order) * PowerSeries::expand(1 + z * w, Var::w, order);
  CHECK(lhs == PowerSeries::expand((1 + z * w) / (1 - q * w), Var::w, order));
}
