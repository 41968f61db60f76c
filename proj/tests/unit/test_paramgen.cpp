#include "catch_poly.hpp"
#include "reflectq/paramgen/script.hpp"

using namespace reflectq;
using namespace reflectq::paramgen;
using alg::Var;
using weights::operator+;
using weights::operator-;

namespace {
const RatFunc q = RatFunc::var(Var::q);
const RatFunc lam = RatFunc::var(Var::lam);
const RatFunc mu = RatFunc::var(Var::mu);
const RatFunc nu = RatFunc::var(Var::nu);

std::vector<Composition> box(int k, int bound) {
  std::vector<Composition> out;
  Composition c(static_cast<std::size_t>(k), 0);
  while (true) {
    out.push_back(c);
    std::size_t i = 0;
    while (i < c.size() && c[i] == bound) c[i++] = 0;
    if (i == c.size()) return out;
    ++c[i];
  }
}
}  // namespace

TEST_CASE("script K at the empty index is 1") {
  CHECK(script_k(lam, {0}, {0}) == RatFunc(1));
  // k = 1, a = 0, g = 1: (-q;q)_1 / (-lam^2;q)_1
  CHECK(script_k(lam, {0}, {1}) == (1 + q) / (1 + lam * lam));
}

TEST_CASE("R and R** are related by reversal") {
  for (const auto& g : box(2, 2)) {
    for (const auto& d : box(2, 2)) {
      for (const auto& a : box(2, 2)) {
        Composition b = g + d - a;
        if (!weights::nonnegative(b)) continue;
        CHECK(script_r(ScriptKind::Rstarstar, lam, mu, g, d, a, b) ==
              script_r(ScriptKind::R, mu, lam, weights::rho(b), weights::rho(a), weights::rho(d), weights::rho(g)));
      }
    }
  }
}

TEST_CASE("factored elements equal the rational-function elements") {
  for (const auto& a : box(2, 2)) {
    for (const auto& g : box(2, 2)) {
      CHECK(script_elem_factored(ScriptKind::K, 1, 0, g, {}, a, {}).to_ratfunc() == script_k(mu, a, g));
    }
  }
  const std::vector<RatFunc> params{lam, mu, nu};
  for (auto kind : {ScriptKind::R, ScriptKind::Rstar, ScriptKind::Rstarstar}) {
    for (const auto& g : box(2, 2)) {
      for (const auto& d : box(2, 1)) {
        for (const auto& a : box(2, 2)) {
          Composition b = kind == ScriptKind::Rstar ? a - g + d : g + d - a;
          if (!weights::nonnegative(b)) continue;
          RatFunc want = script_r(kind, params[0], params[2], g, d, a, b);
          CHECK(script_elem_factored(kind, 0, 2, g, d, a, b).to_ratfunc() == want);
          CHECK(script_support(kind, g, d, a, b) == !want.is_zero());
        }
      }
    }
  }
  CHECK_THROWS_AS(script_elem_factored(ScriptKind::K, 3, 0, {0}, {}, {0}, {}), Error);
}

TEST_CASE("prescribed transitions of the parametric equations") {
  CHECK(check_param_eq(ParamEquation::reflection, {{0}, {0}}, {{0}, {0}}).pass());
  CHECK(check_param_eq(ParamEquation::reflection, {{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}).pass());
  CHECK(check_param_eq(ParamEquation::ybe_RRR, {{1, 0}, {0, 2}, {1, 1}}, {{0, 1}, {2, 0}, {1, 1}}).pass());
  CHECK(check_param_eq(ParamEquation::ybe_sRR, {{1, 0}, {0, 1}, {1, 0}}, {{0, 1}, {1, 0}, {0, 0}}).pass());
  CHECK_THROWS_AS(check_param_eq(ParamEquation::reflection, {{0}}, {{0}}), Error);
  CHECK_THROWS_AS(check_param_eq(ParamEquation::ybe_RRR, {{0}, {0}, {0, 0}}, {{0}, {0}, {0}}), Error);
}

TEST_CASE("both sides agree on every small transition") {
  for (auto eq : {ParamEquation::ybe_RRR, ParamEquation::ybe_sRR, ParamEquation::ybe_ssR, ParamEquation::ybe_sss,
                  ParamEquation::reflection}) {
    auto r = check_param_sector(eq, 1, 1);
    INFO(to_string(eq));
    CHECK(r.pass());
    CHECK(r.checked == (eq == ParamEquation::reflection ? 16u : 64u));
  }
  // the sides are non-trivial maps
  auto sides = apply_sides(ParamEquation::reflection, {{1}, {0}}, 1);
  CHECK(sides.lhs.size() > 1);
  CHECK(sides.lhs.size() == sides.rhs.size());
}

TEST_CASE("gauge replacement keeps the Yang-Baxter equation") {
  ScriptGauge g = random_gauge(2, 7);
  CHECK_FALSE(g.is_trivial());
  CHECK(check_gauge_invariance(ParamEquation::ybe_RRR, 2, 1, g).pass());
  CHECK(check_gauge_invariance(ParamEquation::ybe_sRR, 1, 1, random_gauge(1, 3)).pass());
  CHECK_THROWS_AS(check_gauge_invariance(ParamEquation::reflection, 1, 1, g), Error);
}

TEST_CASE("specialization probe reports ratios per sector") {
  ProbeReport p = specialization_probe(1, 1, 1);
  CHECK_FALSE(p.rows.empty());
  CHECK(p.constant_per_sector.count("K"));
}

TEST_CASE("equation names round-trip") {
  for (auto eq : {ParamEquation::ybe_RRR, ParamEquation::ybe_sRR, ParamEquation::ybe_ssR, ParamEquation::ybe_sss,
                  ParamEquation::reflection}) {
    CHECK(param_equation_from_string(to_string(eq)) == eq);
  }
  CHECK_THROWS_AS(param_equation_from_string("ybe"), Error);
}
