#include <catch2/catch_amalgamated.hpp>

#include "catch_poly.hpp"
#include "reflectq/exactalg/qcalc.hpp"
#include "reflectq/kmat/kmatrix.hpp"
#include "reflectq/kmat/oracle.hpp"
#include "reflectq/reps/modules.hpp"

using namespace reflectq;
using alg::pochhammer;
using alg::qpow;
using alg::RatFunc;
using alg::Var;
using kmat::KClosedForm;
using qboson::BosonElement;
using weights::Composition;

namespace {

const RatFunc q = RatFunc::var(Var::q);
const RatFunc z = RatFunc::var(Var::z);

}  // namespace

TEST_CASE("small G operators") {
  // g_op(i, j) is G^j_i
  CHECK(kmat::g_op(0, 0) == BosonElement(1));
  CHECK(kmat::g_op(0, 1) == BosonElement::a_plus().scaled(1 + q));
  CHECK(kmat::g_op(1, 0) == BosonElement::a_minus().scaled(1 + q));
  BosonElement g11 = (BosonElement(1) - BosonElement::k().scaled(q * (1 + q) / (1 + q * q))).scaled((1 + q) * (1 + q * q));
  CHECK(kmat::g_op(1, 1) == g11);
}

TEST_CASE("G operators: iota symmetry and grading") {
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; j <= 4; ++j) {
      CHECK(kmat::g_op(j, i) == qboson::iota(kmat::g_op(i, j)));
      CHECK(qboson::grade(kmat::g_op(i, j)) == j - i);
    }
  }
}

TEST_CASE("K for l = 1") {
  for (int n = 2; n <= 4; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        RatFunc expect = ((i == j ? z : RatFunc(1)) + q) / (z + q) * (i < j ? z : RatFunc(1));
        CHECK(kmat::k_elem(weights::unit(n, i), weights::unit(n, j)) == expect);
      }
    }
  }
}

TEST_CASE("K for n = 3, l = 2 sample entries") {
  CHECK(kmat::k_elem({0, 1, 1}, {2, 0, 0}) == (1 + q).pow(2) / ((q + z) * (q * q + z)));
  CHECK(kmat::k_elem({0, 1, 1}, {1, 1, 0}) == (1 + q) * (1 + q + q * q + q * z) / ((1 + q * q) * (q + z) * (q * q + z)));
  CHECK(kmat::k_elem({1, 0, 1}, {1, 1, 0}) ==
        (1 + q) * (q + z + q * z + q * q * z) / ((1 + q * q) * (q + z) * (q * q + z)));
}

TEST_CASE("K normalization and weight conservation") {
  for (int n = 2; n <= 4; ++n) {
    for (int l = 1; l <= 3; ++l) {
      CHECK(kmat::k_elem(weights::scaled_unit(n, 1, l), weights::scaled_unit(n, 1, l)).is_one());
    }
  }
  CHECK(kmat::k_elem({1, 0}, {1, 1}).is_zero());
}

TEST_CASE("trace formula against the extremal closed form") {
  for (int n = 2; n <= 4; ++n) {
    for (int l = 1; l <= 3; ++l) {
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          auto a = weights::scaled_unit(n, i, l);
          auto g = weights::scaled_unit(n, j, l);
          CHECK(kmat::k_elem(a, g) == kmat::k_closed(KClosedForm::extremal, a, g));
        }
      }
    }
  }
}

TEST_CASE("trace formula against the rank-2 closed form") {
  for (int l = 0; l <= 4; ++l) {
    for (const auto& a : weights::enumerate_B(2, l)) {
      for (const auto& g : weights::enumerate_B(2, l)) {
        CHECK(kmat::k_elem(a, g) == kmat::k_closed(KClosedForm::n2, a, g));
      }
    }
  }
}

TEST_CASE("special points") {
  for (int n = 2; n <= 3; ++n) {
    for (int l = 1; l <= 3; ++l) {
      for (const auto& a : weights::enumerate_B(n, l)) {
        for (const auto& g : weights::enumerate_B(n, l)) {
          RatFunc k = kmat::k_elem(a, g);
          CHECK(alg::substitute(k, {{Var::z, qpow(-l)}}) == kmat::k_closed(KClosedForm::special_qml, a, g));
          CHECK(alg::substitute(k, {{Var::z, RatFunc(1)}}) == kmat::k_closed(KClosedForm::special_1, a, g));
        }
      }
    }
  }
}

TEST_CASE("hatted regrouping agrees with the trace formula") {
  for (int n = 2; n <= 3; ++n) {
    for (int l = 1; l <= 3; ++l) {
      for (const auto& a : weights::enumerate_B(n, l)) {
        for (const auto& g : weights::enumerate_B(n, l)) {
          CHECK(kmat::k_elem_hatted(a, g) == kmat::k_elem(a, g));
        }
      }
    }
  }
}

TEST_CASE("cyclic and reversal symmetries, dropping a common zero") {
  for (int n = 2; n <= 4; ++n) {
    for (int l = 1; l <= (n == 4 ? 2 : 3); ++l) {
      for (const auto& a : weights::enumerate_B(n, l)) {
        for (const auto& g : weights::enumerate_B(n, l)) {
          RatFunc k = kmat::k_elem(a, g);
          CHECK(k == z.pow(a[0] - g[0]) * kmat::k_elem(weights::sigma(a), weights::sigma(g)));
          CHECK(k == kmat::k_elem(weights::rho(g), weights::rho(a)));
          if (n > 2 && a.back() == 0 && g.back() == 0) {
            CHECK(k == kmat::k_elem(weights::truncate(a), weights::truncate(g)));
          }
        }
      }
    }
  }
}

TEST_CASE("K is dense for l >= 1") {
  for (int n = 2; n <= 3; ++n) {
    for (int l = 1; l <= 2; ++l) {
      auto t = kmat::k_table(n, l);
      auto d = weights::enumerate_B(n, l).size();
      CHECK(t.nonzeros() == d * d);
    }
  }
}

TEST_CASE("K intertwines the coideal generators") {
  for (int n = 2; n <= 3; ++n) {
    for (int l = 1; l <= 2; ++l) {
      auto k = kmat::k_table(n, l);
      for (int i = 0; i < n; ++i) {
        auto lhs = k * reps::act_coideal(reps::SpaceKind::V, n, l, reps::Coideal::b, i, z);
        auto rhs = reps::act_coideal(reps::SpaceKind::Vstar, n, l, reps::Coideal::b, i, z.inverse()) * k;
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("K' intertwines the primed coideal generators") {
  for (int n = 2; n <= 3; ++n) {
    for (int l = 1; l <= 2; ++l) {
      auto k = kmat::kprime_table(n, l);
      for (int i = 0; i < n; ++i) {
        auto lhs = k * reps::act_coideal(reps::SpaceKind::V, n, l, reps::Coideal::bprime, i, z);
        auto rhs = reps::act_coideal(reps::SpaceKind::Vvee, n, l, reps::Coideal::bprime, i, z.inverse()) * k;
        CHECK(lhs == rhs);
      }
    }
  }
}

namespace {

bool oracle_matches(int n, int l, const mpq_class& q0, const mpq_class& z0) {
  auto r = kmat::intertwiner_oracle(n, l, q0, z0);
  if (r.rank != r.unknowns - 1) return false;
  alg::Point at{};
  at[alg::index_of(Var::q)] = q0;
  at[alg::index_of(Var::z)] = z0;
  for (const auto& [key, v] : r.entries) {
    if (kmat::k_elem(key.first, key.second).evaluate(at) != v) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("linear-solve oracle agrees with the trace formula") {
  CHECK(oracle_matches(2, 1, mpq_class(2, 3), mpq_class(5, 7)));
  CHECK(oracle_matches(3, 2, mpq_class(-37, 41), mpq_class(88, 13)));
  CHECK(oracle_matches(4, 3, mpq_class(11, 4), mpq_class(-3, 97)));
}

TEST_CASE("intertwining relation holds symbolically") {
  for (int n = 2; n <= 3; ++n) {
    for (int l = 1; l <= 2; ++l) {
      for (int i = 0; i < n; ++i) {
        for (const auto& a : weights::enumerate_B(n, l)) {
          for (const auto& g : weights::enumerate_B(n, l)) {
            RatFunc s;
            for (const auto& t : kmat::intertwining_relation(i, a, g)) s += t.coeff * kmat::k_elem(t.a, t.g);
            CHECK(s.is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("K' normalization and l = 0") {
  CHECK(kmat::kprime_elem({0, 0}, {0, 0}).is_one());
  for (int n = 2; n <= 3; ++n) {
    auto t = weights::scaled_unit(n, 1, 2);
    CHECK(kmat::kprime_elem(t, t).is_one());
  }
}
