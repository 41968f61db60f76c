#include "reflectq/reps/modules.hpp"

#include "reflectq/exactalg/qcalc.hpp"

namespace reflectq::reps {

using alg::qnumber;
using alg::qpow;
using alg::Var;
using weights::at;
using weights::unit;
using weights::operator+;
using weights::operator-;

std::string to_string(Gen g) {
  switch (g) {
    case Gen::e: return "e";
    case Gen::f: return "f";
    case Gen::k: return "k";
    case Gen::kinv: return "kinv";
  }
  return "?";
}

namespace {

int reduce_index(int n, int i) { return ((i % n) + n) % n; }

void add_if_valid(OperatorTable& t, const Composition& a, const Composition& target, const RatFunc& c) {
  if (weights::nonnegative(target)) t.add({a}, {target}, c);
}

}  // namespace

OperatorTable act_generator(SpaceKind kind, int n, int l, Gen g, int i, const RatFunc& z) {
  if (n < 2) throw Error("rank n must be at least 2");
  i = reduce_index(n, i);
  const bool zero = (i == 0);
  const RatFunc zp = zero ? z : RatFunc(1);
  const RatFunc zm = zero ? z.inverse() : RatFunc(1);
  const Composition d = unit(n, i) - unit(n, i + 1);  // e_i - e_{i+1}
  Space s{kind, n, l};
  OperatorTable t({s}, {s});
  for (const auto& a : weights::enumerate_B(n, l)) {
    const int ai = at(a, i);
    const int aj = at(a, i + 1);
    switch (kind) {
      case SpaceKind::V:
        switch (g) {
          case Gen::e: add_if_valid(t, a, a + d, zp * qnumber(aj)); break;
          case Gen::f: add_if_valid(t, a, a - d, zm * qnumber(ai)); break;
          case Gen::k: t.add({a}, {a}, qpow(ai - aj)); break;
          case Gen::kinv: t.add({a}, {a}, qpow(aj - ai)); break;
        }
        break;
      case SpaceKind::Vstar:
        switch (g) {
          case Gen::e: add_if_valid(t, a, a - d, -zp * qnumber(aj + 1) * qpow(-ai + aj + 2)); break;
          case Gen::f: add_if_valid(t, a, a + d, -zm * qnumber(ai + 1) * qpow(ai - aj)); break;
          case Gen::k: t.add({a}, {a}, qpow(aj - ai)); break;
          case Gen::kinv: t.add({a}, {a}, qpow(ai - aj)); break;
        }
        break;
      case SpaceKind::Vvee:
        switch (g) {
          case Gen::e: add_if_valid(t, a, a - d, zp * qnumber(ai)); break;
          case Gen::f: add_if_valid(t, a, a + d, zm * qnumber(aj)); break;
          case Gen::k: t.add({a}, {a}, qpow(aj - ai)); break;
          case Gen::kinv: t.add({a}, {a}, qpow(ai - aj)); break;
        }
        break;
    }
  }
  return t;
}

OperatorTable tensor_act(const std::vector<Space>& factors, const std::vector<RatFunc>& spectral, Gen g, int i) {
  if (factors.size() != spectral.size()) throw Error("one spectral parameter per tensor factor is required");
  const std::size_t nf = factors.size();
  auto single = [&](std::size_t p, Gen h) {
    return act_generator(factors[p].kind, factors[p].n, factors[p].l, h, i, spectral[p]).embed(factors, p);
  };
  if (g == Gen::k || g == Gen::kinv) {
    OperatorTable r = OperatorTable::identity(factors);
    for (std::size_t p = 0; p < nf; ++p) r = single(p, g) * r;
    return r;
  }
  OperatorTable total(factors, factors);
  for (std::size_t p = 0; p < nf; ++p) {
    OperatorTable term = single(p, g);
    for (std::size_t r = 0; r < nf; ++r) {
      if (g == Gen::e && r > p) term = single(r, Gen::k) * term;
      if (g == Gen::f && r < p) term = single(r, Gen::kinv) * term;
    }
    total += term;
  }
  return total;
}

namespace {

// -e + q^2 k f + q/(1-q) k   or   e + q k f (the p/(1-q) k term is added over p)
OperatorTable coideal_from(const OperatorTable& e, const OperatorTable& f, const OperatorTable& k, Coideal variant) {
  const RatFunc q = RatFunc::var(Var::q);
  if (variant == Coideal::b) return e.scaled(RatFunc(-1)) + (k * f).scaled(q * q) + k.scaled(q / (1 - q));
  const RatFunc p = RatFunc::var(Var::p);
  OperatorTable over_q = e + (k * f).scaled(q);
  return to_p(over_q) + to_p(k).scaled(p / (1 + p * p));
}

}  // namespace

OperatorTable act_coideal(SpaceKind kind, int n, int l, Coideal variant, int i, const RatFunc& z) {
  return coideal_from(act_generator(kind, n, l, Gen::e, i, z), act_generator(kind, n, l, Gen::f, i, z),
                      act_generator(kind, n, l, Gen::k, i, z), variant);
}

OperatorTable tensor_coideal(const std::vector<Space>& factors, const std::vector<RatFunc>& spectral, Coideal variant,
                             int i) {
  return coideal_from(tensor_act(factors, spectral, Gen::e, i), tensor_act(factors, spectral, Gen::f, i),
                      tensor_act(factors, spectral, Gen::k, i), variant);
}

OperatorTable to_p(const OperatorTable& t) {
  const RatFunc p = RatFunc::var(Var::p);
  std::vector<alg::Binding> b{{Var::q, -p * p}};
  return t.map_entries([&](const RatFunc& c) { return alg::substitute(c, b); });
}

OperatorTable vee_star_iso(int n, int l) {
  const RatFunc q = RatFunc::var(Var::q);
  Space s{SpaceKind::Vstar, n, l};
  OperatorTable t({s}, {s});
  for (const auto& a : weights::enumerate_B(n, l)) {
    RatFunc d = (-q).pow(weights::brace(a));
    for (int v : a) d *= alg::pochhammer(q * q, q * q, v);
    t.add({a}, {a}, d);
  }
  return t;
}

verify::VerifyReport dual_pairing_check(int n, int l, Gen g, int i) {
  verify::VerifyReport rep;
  rep.equation = "dual-pairing";
  rep.params = {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"gen", to_string(g) + std::to_string(i)}};
  const RatFunc z = RatFunc::var(Var::z);
  auto vs = [&](Gen h) { return act_generator(SpaceKind::V, n, l, h, i, z); };
  OperatorTable lhs = act_generator(SpaceKind::Vstar, n, l, g, i, z);
  // S(e) = -e k^-1, S(f) = -k f, S(k^{+-1}) = k^{-+1}
  OperatorTable anti;
  switch (g) {
    case Gen::e: anti = (vs(Gen::e) * vs(Gen::kinv)).scaled(RatFunc(-1)); break;
    case Gen::f: anti = (vs(Gen::k) * vs(Gen::f)).scaled(RatFunc(-1)); break;
    case Gen::k: anti = vs(Gen::kinv); break;
    case Gen::kinv: anti = vs(Gen::k); break;
  }
  const auto basis = weights::enumerate_B(n, l);
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      ++rep.checked;
      // (pi*(g) v*_a, v_b) is the v*_b coefficient of pi*(g) v*_a
      RatFunc diff = lhs.entry({a}, {b}) - anti.entry({b}, {a});
      if (!diff.is_zero()) rep.failures.push_back({weights::to_string(a) + "," + weights::to_string(b), diff.to_string()});
    }
  }
  return rep;
}

}  // namespace reflectq::reps
