#include <random>

#include "catch_poly.hpp"
#include "reflectq/exactalg/qcalc.hpp"
#include "reflectq/qboson/boson.hpp"

using namespace reflectq;
using namespace reflectq::qboson;
using alg::RatFunc;
using alg::Var;

template <>
struct Catch::StringMaker<BosonElement> {
  static std::string convert(const BosonElement& x) { return x.to_string(); }
};

namespace {
const RatFunc q = RatFunc::var(Var::q);
const RatFunc w = RatFunc::var(Var::w);
const BosonElement ap = BosonElement::a_plus();
const BosonElement am = BosonElement::a_minus();
const BosonElement kk = BosonElement::k();

// Letters: 0 = a+, 1 = a-, 2 = k, 3 = k^-1.
BosonElement letter(int c) {
  switch (c) {
    case 0: return ap;
    case 1: return am;
    case 2: return kk;
    default: return BosonElement::k(-1);
  }
}

BosonElement random_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), c(0, 3);
  BosonElement x(1);
  for (int i = len(rng); i > 0; --i) x = x * letter(c(rng));
  return x;
}

// Direct action of a letter on a Fock vector (index = occupation number).
using Fock = std::vector<RatFunc>;
Fock act(int c, const Fock& v) {
  Fock out(v.size() + 1);
  for (std::size_t m = 0; m < v.size(); ++m) {
    if (v[m].is_zero()) continue;
    int mm = static_cast<int>(m);
    switch (c) {
      case 0: out[m + 1] += v[m]; break;
      case 1: if (m > 0) out[m - 1] += v[m] * (RatFunc(1) - alg::qpow(mm)); break;
      case 2: out[m] += v[m] * alg::qpow(mm); break;
      default: out[m] += v[m] * alg::qpow(-mm); break;
    }
  }
  return out;
}

Fock act_element(const BosonElement& x, const Fock& v) {
  Fock out(v.size() + 16);
  for (const auto& [nw, c] : x.terms()) {
    Fock t = v;
    for (int i = 0; i < nw.minus; ++i) t = act(1, t);
    for (int i = 0; i < std::abs(nw.k); ++i) t = act(nw.k > 0 ? 2 : 3, t);
    for (int i = 0; i < nw.plus; ++i) t = act(0, t);
    for (std::size_t m = 0; m < t.size(); ++m) out[m] += t[m] * c;
  }
  return out;
}
}  // namespace

TEST_CASE("normal ordering of the defining relations") {
  CHECK(am * ap == BosonElement(1) - kk.scaled(q));
  CHECK(ap * am == BosonElement(1) - kk);
  CHECK(kk * ap == (ap * kk).scaled(q));
  CHECK(BosonElement::k(-1) * ap == (ap * BosonElement::k(-1)).scaled(1 / q));
  auto lhs = am * am * ap * ap;
  auto expected = (BosonElement(1) - kk.scaled(q)) * (BosonElement(1) - kk.scaled(q * q));
  CHECK(lhs == expected);
  // same thing checked on |0>, |1>, |2>
  for (int m = 0; m < 3; ++m) {
    Fock v(3);
    v[static_cast<std::size_t>(m)] = RatFunc(1);
    Fock direct = act(1, act(1, act(0, act(0, v))));
    Fock via = act_element(lhs, v);
    for (std::size_t i = 0; i < direct.size(); ++i) CHECK(direct[i] == via[i]);
  }
}

TEST_CASE("normal product agrees with the Fock representation on random words") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> len(0, 6), c(0, 3);
    std::vector<int> letters(static_cast<std::size_t>(len(rng)));
    BosonElement x(1);
    for (auto& l : letters) {
      l = c(rng);
      x = x * letter(l);
    }
    for (int m = 0; m < 4; ++m) {
      Fock v(4);
      v[static_cast<std::size_t>(m)] = RatFunc(1);
      Fock direct = v;
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) direct = act(*it, direct);
      Fock via = act_element(x, v);
      for (std::size_t i = 0; i < std::max(direct.size(), via.size()); ++i) {
        RatFunc a = i < direct.size() ? direct[i] : RatFunc();
        RatFunc b = i < via.size() ? via[i] : RatFunc();
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("associativity and the anti-automorphism") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = random_word(rng, 6), b = random_word(rng, 6), c = random_word(rng, 6);
    CHECK((a * b) * c == a * (b * c));
    CHECK(iota(a * b) == iota(b) * iota(a));
    CHECK(iota(iota(a)) == a);
  }
  CHECK(iota(ap * kk) == kk * am);
}

TEST_CASE("grading") {
  CHECK(grade(ap.scaled(1 + q)) == 1);
  CHECK(grade(BosonElement(1)) == 0);
  CHECK_FALSE(grade(ap + am).has_value());
}

TEST_CASE("Fock traces") {
  for (int r = -2; r <= 3; ++r) CHECK(trace(BosonElement::k(r)) == 1 / (1 - alg::qpow(r) * w));
  CHECK(trace(ap * am) == 1 / (1 - w) - 1 / (1 - q * w));
  CHECK(trace(ap).is_zero());
  CHECK(trace(ap * kk * ap * am).is_zero());
}

TEST_CASE("closed-form trace matches direct Fock summation") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> ii(0, 3), mm(-2, 2), cc(-3, 3);
  for (int trial = 0; trial < 6; ++trial) {
    BosonElement x;
    for (int t = 0; t < 3; ++t) {
      int i = ii(rng);
      x += BosonElement::word(i, mm(rng), i, RatFunc(cc(rng)) + q);
    }
    const int order = 12;
    CHECK(alg::PowerSeries::expand(trace(x), Var::w, order) == fock_trace_series(x, order));
  }
}

TEST_CASE("trace cyclicity on balanced pairs") {
  std::mt19937 rng(17);
  int checked = 0;
  while (checked < 15) {
    auto a = random_word(rng, 5), b = random_word(rng, 5);
    auto ga = grade(a), gb = grade(b);
    if (!ga || !gb || *ga + *gb != 0) continue;
    // Tr(w^h XY) = w^{grade X}... for balanced pairs moving X around w^h shifts w by q-free factor w^{g}.
    RatFunc lhs = trace(a * b);
    RatFunc rhs = trace(b * a) * w.pow(*ga);
    CHECK(lhs == rhs);
    ++checked;
  }
}
