#include "catch_poly.hpp"
#include "reflectq/crystal/comb.hpp"
#include "reflectq/exactalg/qcalc.hpp"
#include "reflectq/kmat/kmatrix.hpp"
#include "reflectq/rmat/rmatrix.hpp"

using namespace reflectq;
using namespace reflectq::crystal;
using alg::Var;

namespace {
const RatFunc q = RatFunc::var(Var::q);
const RatFunc z = RatFunc::var(Var::z);

// "12235" -> multiplicities of each letter
Composition tab(const std::string& word, int n) {
  Composition c(static_cast<std::size_t>(n), 0);
  for (char ch : word) ++c[static_cast<std::size_t>(ch - '1')];
  return c;
}

std::vector<Composition> state(const std::string& a, const std::string& b, int n) { return {tab(a, n), tab(b, n)}; }
}  // namespace

TEST_CASE("z_power recognizes bare powers of z") {
  CHECK(z_power(pow(z, 3)) == 3);
  CHECK(z_power(1 / (z * z)) == -2);
  CHECK(z_power(RatFunc(1)) == 0);
  CHECK_FALSE(z_power(2 * z).has_value());
  CHECK_FALSE(z_power(q * z).has_value());
  CHECK_FALSE(z_power(RatFunc()).has_value());
}

TEST_CASE("p_order substitutes q = -p^2") {
  auto lo = p_order(q * q * z + 3 * q * q * q);
  CHECK(lo.order == 4);
  CHECK(lo.leading == z);
  lo = p_order(1 / (q + q * q));
  CHECK(lo.order == -2);
  CHECK(lo.leading == RatFunc(-1));
  // z carries weight when asked
  lo = p_order(z + q, 3);
  CHECK(lo.order == 2);
  CHECK(lo.leading == RatFunc(-1));
}

TEST_CASE("p_order of K' at weight n matches the expansion in p") {
  const RatFunc p = RatFunc::var(Var::p);
  for (int n : {2, 3}) {
    for (int l : {1, 2}) {
      for (const auto& a : weights::enumerate_B(n, l)) {
        for (const auto& g : weights::enumerate_B(n, l)) {
          RatFunc k = kmat::kprime_elem(a, g);
          if (k.is_zero()) continue;
          auto direct = alg::lowest_order(k, Var::p);
          auto via = p_order(kmat::k_elem(a, g), n);
          INFO(weights::to_string(a) << " -> " << weights::to_string(g));
          CHECK(direct.order == via.order + weights::brace(weights::operator-(a, g)));
          CHECK(direct.leading == via.leading);
        }
      }
    }
  }
}

TEST_CASE("Rvee normalizer closed form") {
  for (int n : {2, 3, 4, 5}) {
    for (int l = 0; l <= 2; ++l) {
      for (int m = 0; m <= 2; ++m) {
        RatFunc closed = pow(pow(-q, 1 - n) * z, m) * alg::pochhammer(pow(-q, n) * alg::qpow(l - m) / z, q * q, m) /
                         alg::pochhammer(pow(-q, 2 - n) * alg::qpow(l - m) * z, q * q, m);
        INFO("n=" << n << " l=" << l << " m=" << m);
        CHECK(rvee_normalizer(n, l, m) == closed);
      }
    }
  }
}

TEST_CASE("limit maps are bijections with the closed-form energies") {
  for (int n : {2, 3}) {
    for (int l = 0; l <= 2; ++l) {
      for (int m = 0; m <= 2; ++m) {
        for (auto kind : {CombKind::R, CombKind::Rvee, CombKind::Rveevee}) {
          INFO(to_string(kind) << " n=" << n << " l=" << l << " m=" << m);
          CombMap map = limit_map(kind, n, l, m);
          CHECK(is_bijection(map));
          CHECK(check_energies(map).pass());
        }
      }
      CombMap k = comb_k(n, l);
      CHECK(is_bijection(k));
      CHECK(check_energies(k).pass());
    }
  }
}

TEST_CASE("K limit is the cyclic shift and its n-th power is the identity") {
  const int n = 3, l = 2;
  CombMap k = comb_k(n, l);
  std::map<Composition, Composition> sig;
  for (const auto& p : k.pairs) sig[p.in[0]] = p.out[0];
  for (const auto& a : weights::enumerate_B(n, l)) {
    Composition c = a;
    for (int i = 0; i < n; ++i) c = sig.at(c);
    CHECK(c == a);
  }
  CHECK(sig.at(Composition{2, 0, 0}) == Composition{0, 0, 2});
}

TEST_CASE("l = 0 limit is the swap with zero energy") {
  for (const auto& b : weights::enumerate_B(3, 2)) {
    CombPair p = limit_column(CombKind::R, 3, 0, 2, {0, 0, 0}, b);
    CHECK(p.out == std::vector<Composition>{b, {0, 0, 0}});
    CHECK(p.energy == 0);
  }
}

TEST_CASE("set-theoretical Yang-Baxter equation") {
  CHECK(check_set_ybe(CombKind::R, 3, 1, 2, 1).pass());
  CHECK(check_set_ybe(CombKind::Rveevee, 3, 2, 1, 2).pass());
  CHECK_THROWS_AS(check_set_ybe(CombKind::K, 3, 1, 1, 1), Error);
}

TEST_CASE("set-theoretical reflection equation on all small pairs") {
  auto r = check_set_re(3, 2, 2, SetReMode{});
  CHECK(r.pass());
  CHECK(r.checked == 36u);
  auto s = check_set_re(2, 3, 1, SetReMode{false, 10, 4});
  CHECK(s.pass());
  CHECK(s.checked == 10u);
}

TEST_CASE("worked n = 5 example step by step") {
  SetReEvaluator ev(5);
  SetReChains c = ev.chains(5, 3, tab("12235", 5), tab("124", 5));
  std::vector<std::vector<Composition>> lhs{state("12235", "124", 5), state("235", "11224", 5),
                                            state("124", "11224", 5), state("11235", "135", 5),
                                            state("12455", "135", 5)};
  std::vector<std::vector<Composition>> rhs{state("12235", "124", 5), state("11245", "124", 5),
                                            state("135", "11355", 5), state("245", "11355", 5),
                                            state("12455", "135", 5)};
  CHECK(c.lhs == lhs);
  CHECK(c.rhs == rhs);
  CHECK(weights::tableau_str(c.lhs.back()[0], true) ==
        "1\xCC\x84"
        "2\xCC\x84"
        "4\xCC\x84"
        "5\xCC\x84"
        "5\xCC\x84");
}

TEST_CASE("unprimed K limit conjecture is reported") {
  ConjectureReport rep = check_k_limit_conjecture(2, 1);
  CHECK(rep.entries.size() == 4u);
  CHECK((rep.status() == "SUPPORTED" || rep.status() == "REFUTED"));
  CHECK(rep.supported() == (rep.status() == "SUPPORTED"));
}

TEST_CASE("kind names round-trip") {
  for (auto k : {CombKind::R, CombKind::Rvee, CombKind::Rveevee, CombKind::K}) {
    CHECK(comb_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS_AS(comb_kind_from_string("s"), Error);
}
