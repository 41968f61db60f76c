#include "reflectq/kmat/kmatrix.hpp"

#include <optional>

#include "reflectq/exactalg/qcalc.hpp"

namespace reflectq::kmat {

using alg::pochhammer;
using alg::qpow;
using alg::Var;
using reps::Space;
using reps::SpaceKind;

namespace {

const RatFunc& qv() {
  static const RatFunc q = RatFunc::var(Var::q);
  return q;
}

const RatFunc& zv() {
  static const RatFunc z = RatFunc::var(Var::z);
  return z;
}

// sum_m (a;q)_m (b;q)_m / ((q;q)_m (c;q)_m) (q k)^m for a terminating series.
BosonElement phi_of_qk(const RatFunc& a, const RatFunc& b, const RatFunc& c, int terms) {
  const RatFunc& q = qv();
  BosonElement s;
  for (int m = 0; m <= terms; ++m) {
    RatFunc coeff = pochhammer(a, q, m) * pochhammer(b, q, m) / (pochhammer(q, q, m) * pochhammer(c, q, m));
    s += BosonElement::k(m).scaled(coeff * qpow(m));
  }
  return s;
}

RatFunc trace_of_product(const Composition& a, const Composition& g, bool hatted) {
  BosonElement prod(1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    BosonElement gi = g_op(a[i], g[i]);
    if (hatted) gi = BosonElement::k(-a[i]) * gi;
    prod = prod * gi;
    if (prod.is_zero()) return RatFunc();
  }
  return qboson::trace(prod);
}

}  // namespace

BosonElement g_op(int i, int j) {
  if (i < 0 || j < 0) throw Error("G operator indices must be non-negative");
  const RatFunc& q = qv();
  const RatFunc pre = pochhammer(-q, q, i + j);
  if (i >= j) {
    BosonElement s = phi_of_qk(qpow(-j), -qpow(-j), -qpow(-i - j), j);
    return (s * BosonElement::a_minus(i - j)).scaled(pre);
  }
  BosonElement s = phi_of_qk(qpow(-i), -qpow(-i), -qpow(-i - j), i);
  return (BosonElement::a_plus(j - i) * s).scaled(pre);
}

RatFunc trace_prefactor(int l) {
  const RatFunc& q = qv();
  const RatFunc zi = zv().inverse();
  return pochhammer(qpow(-l) * zi, q, l + 1) / (pochhammer(q * q, q * q, l) * pochhammer(-q * zi, q, l));
}

RatFunc k_elem(const Composition& a, const Composition& g) {
  const int l = weights::size(a);
  if (weights::size(g) != l) return RatFunc();
  RatFunc tr = trace_of_product(a, g, false);
  if (tr.is_zero()) return tr;
  // w = (q^l z)^{-1}
  tr = alg::substitute(tr, {{Var::w, (qpow(l) * zv()).inverse()}});
  return qpow(weights::pairing(g, a)) * trace_prefactor(l) * tr;
}

RatFunc k_elem_hatted(const Composition& a, const Composition& g) {
  const int l = weights::size(a);
  if (weights::size(g) != l) return RatFunc();
  RatFunc tr = trace_of_product(a, g, true);
  if (tr.is_zero()) return tr;
  tr = alg::substitute(tr, {{Var::w, zv().inverse()}});
  return qpow(weights::pairing(a, a)) * trace_prefactor(l) * tr;
}

OperatorTable k_table(int n, int l) {
  OperatorTable t({Space{SpaceKind::V, n, l}}, {Space{SpaceKind::Vstar, n, l}});
  const auto basis = weights::enumerate_B(n, l);
  for (const auto& a : basis) {
    for (const auto& g : basis) t.add({a}, {g}, k_elem(a, g));
  }
  return t;
}

namespace {

RatFunc k_rank2(const Composition& a, const Composition& g) {
  const RatFunc& q = qv();
  const RatFunc& z = zv();
  const RatFunc zi = z.inverse();
  const int l = a[0] + a[1];
  const int s = g[0] - a[0];
  if (s < 0) return z.pow(g[1] - a[1]) * k_rank2(g, a);
  RatFunc pre = qpow(a[0] * g[1]) * z.pow(a[0] - g[0]) * pochhammer(qpow(-l) * zi, q, l + 1) * pochhammer(q, q, s) *
                pochhammer(-q, q, a[0] + g[0]) * pochhammer(-q, q, a[1] + g[1]) /
                (pochhammer(q * q, q * q, l) * pochhammer(-q * zi, q, l));
  RatFunc sum;
  for (int j = 0; j <= a[0]; ++j) {
    for (int k = 0; k <= g[1]; ++k) {
      RatFunc num = qpow(j + k) * pochhammer(qpow(-2 * a[0]), q * q, j) * pochhammer(qpow(-2 * g[1]), q * q, k);
      RatFunc den = pochhammer(qpow(j + k - l) * zi, q, s + 1) * pochhammer(q, q, j) * pochhammer(q, q, k) *
                    pochhammer(-qpow(-a[0] - g[0]), q, j) * pochhammer(-qpow(-a[1] - g[1]), q, k);
      sum += num / den;
    }
  }
  return pre * sum;
}

std::optional<std::size_t> extremal_index(const Composition& c, int l) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == l) return i;
  }
  return std::nullopt;
}

}  // namespace

RatFunc k_closed(KClosedForm form, const Composition& a, const Composition& g) {
  const RatFunc& q = qv();
  const RatFunc& z = zv();
  const int l = weights::size(a);
  if (weights::size(g) != l || a.size() != g.size()) throw Error("closed form needs a and g of equal rank and weight");
  switch (form) {
    case KClosedForm::n2:
      if (a.size() != 2) throw Error("rank-2 closed form needs n = 2");
      return k_rank2(a, g);
    case KClosedForm::extremal: {
      auto i = extremal_index(a, l);
      auto j = extremal_index(g, l);
      if (l == 0 || !i || !j) throw Error("extremal closed form needs a = l e_i and g = l e_j with l > 0");
      RatFunc zd = (*i == *j) ? z.inverse() : RatFunc(1);
      return pochhammer(-q * zd, q, l) / pochhammer(-q / z, q, l) * z.pow(*i > *j ? -l : 0);
    }
    case KClosedForm::special_qml: {
      RatFunc r = qpow(weights::pairing(g, a)) / pochhammer(-q, q, 2 * l);
      for (std::size_t i = 0; i < a.size(); ++i) r *= pochhammer(-q, q, a[i] + g[i]);
      return r;
    }
    case KClosedForm::special_1: {
      RatFunc r = pochhammer(-q, q, l).pow(-2);
      for (std::size_t i = 0; i < a.size(); ++i) r *= pochhammer(-q, q, a[i]) * pochhammer(-q, q, g[i]);
      return r;
    }
  }
  return RatFunc();
}

RatFunc kprime_elem(const Composition& a, const Composition& g) {
  const int n = static_cast<int>(a.size());
  const int l = weights::size(a);
  const RatFunc p = RatFunc::var(Var::p);
  const RatFunc q = -p * p;
  RatFunc k = alg::substitute(k_elem(a, g), {{Var::q, q}, {Var::z, p.pow(n) * zv()}});
  RatFunc r = p.pow(weights::brace(weights::operator-(a, g))) * pochhammer(q * q, q * q, l) * k;
  for (int gi : g) r /= pochhammer(q * q, q * q, gi);
  return r;
}

OperatorTable kprime_table(int n, int l) {
  OperatorTable t({Space{SpaceKind::V, n, l}}, {Space{SpaceKind::Vvee, n, l}});
  const auto basis = weights::enumerate_B(n, l);
  for (const auto& a : basis) {
    for (const auto& g : basis) t.add({a}, {g}, kprime_elem(a, g));
  }
  return t;
}

}  // namespace reflectq::kmat

namespace reflectq::kmat {

std::vector<KTerm> intertwining_relation(int i, const Composition& a, const Composition& g) {
  const int n = static_cast<int>(a.size());
  const RatFunc& q = qv();
  const RatFunc zd = i % n == 0 ? zv() : RatFunc(1);
  const RatFunc zdi = zd.inverse();
  const int ip = i % n == 0 ? n : i;
  const int in = ip % n + 1;
  const Composition shift = weights::operator-(weights::unit(n, ip), weights::unit(n, in));
  const int ai = weights::at(a, ip), ai1 = weights::at(a, in);
  const int gi = weights::at(g, ip), gi1 = weights::at(g, in);
  using weights::operator+;
  using weights::operator-;
  std::vector<KTerm> out;
  auto push = [&](RatFunc c, Composition a2, Composition g2) {
    if (c.is_zero() || !weights::nonnegative(a2) || !weights::nonnegative(g2)) return;
    out.push_back(KTerm{std::move(c), std::move(a2), std::move(g2)});
  };
  push(-zd * alg::qnumber(ai1), a + shift, g);
  push(zdi * alg::qnumber(ai) * qpow(ai - ai1), a - shift, g);
  push(-zdi * qpow(gi1 - gi) * alg::qnumber(gi1), a, g + shift);
  push(zd * alg::qnumber(gi), a, g - shift);
  push((qpow(ai - ai1 + 1) - qpow(gi1 - gi + 1)) / (1 - q), a, g);
  return out;
}

}  // namespace reflectq::kmat
