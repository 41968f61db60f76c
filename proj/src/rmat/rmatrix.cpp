#include "reflectq/rmat/rmatrix.hpp"

#include "reflectq/exactalg/qcalc.hpp"

namespace reflectq::rmat {

using alg::pochhammer;
using alg::qbinomial;
using alg::qpow;
using alg::Var;
using reps::Space;
using reps::SpaceKind;
using weights::operator+;
using weights::operator-;

std::string to_string(RKind k) {
  switch (k) {
    case RKind::plain: return "R";
    case RKind::star: return "Rstar";
    case RKind::starstar: return "Rstarstar";
    case RKind::vee: return "Rvee";
    case RKind::veevee: return "Rveevee";
  }
  return "?";
}

RKind rkind_from_string(const std::string& s) {
  for (auto k : {RKind::plain, RKind::star, RKind::starstar, RKind::vee, RKind::veevee}) {
    if (to_string(k) == s) return k;
  }
  throw Error("unknown R matrix kind: " + s);
}

RatFunc phibar(const Composition& g, const Composition& b, const RatFunc& lam, const RatFunc& mu,
               const RatFunc& base) {
  if (!weights::leq(g, b) || !weights::nonnegative(g)) return RatFunc();
  const int sg = weights::size(g);
  const int sb = weights::size(b);
  RatFunc r = pochhammer(lam, base, sg) * pochhammer(mu / lam, base, sb - sg) / pochhammer(mu, base, sb);
  for (std::size_t i = 0; i < g.size(); ++i) r *= qbinomial(b[i], g[i], base);
  return r;
}

RatFunc phi(const Composition& g, const Composition& b, const RatFunc& lam, const RatFunc& mu, const RatFunc& base) {
  RatFunc bar = phibar(g, b, lam, mu, base);
  if (bar.is_zero()) return bar;
  return base.pow(weights::pairing(b - g, g)) * (mu / lam).pow(weights::size(g)) * bar;
}

namespace {

// All x with 0 <= x <= bound componentwise.
void boxes(const Composition& bound, std::size_t pos, Composition& cur, std::vector<Composition>& out) {
  if (pos == bound.size()) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= bound[pos]; ++v) {
    cur[pos] = v;
    boxes(bound, pos + 1, cur, out);
  }
}

}  // namespace

RatFunc a_elem(const Composition& g, const Composition& d, const Composition& a, const Composition& b,
               const RatFunc& z) {
  const int l = weights::size(a);
  const int m = weights::size(b);
  const RatFunc q = RatFunc::var(Var::q);
  const RatFunc q2 = q * q;
  const Composition gb = weights::truncate(g);
  const Composition db = weights::truncate(d);
  const Composition bb = weights::truncate(b);
  const RatFunc lam1 = qpow(m - l) * z;
  const RatFunc mu1 = qpow(-l - m) * z;
  const RatFunc lam2 = qpow(-l - m) / z;
  const RatFunc mu2 = qpow(-2 * m);

  // eta <= beta-bar (second factor) and xi = g + d - eta >= d-bar, i.e. eta <= g-bar.
  Composition bound(gb.size());
  for (std::size_t i = 0; i < gb.size(); ++i) bound[i] = std::min(bb[i], gb[i]);
  std::vector<Composition> etas;
  Composition cur(bound.size());
  boxes(bound, 0, cur, etas);

  RatFunc sum;
  for (const auto& eta : etas) {
    const Composition xi = gb + db - eta;
    RatFunc t = phi(xi - db, xi, lam1, mu1, q2);
    if (t.is_zero()) continue;
    t *= phi(eta, bb, lam2, mu2, q2);
    sum += t;
  }
  if (sum.is_zero()) return sum;
  return qpow(weights::pairing(a, b) - weights::pairing(d, g)) * sum;
}

RatFunc r_elem(RKind kind, const Composition& g, const Composition& d, const Composition& a, const Composition& b,
               const RatFunc& z) {
  using weights::rho;
  switch (kind) {
    case RKind::plain:
      if (g + d != a + b) return RatFunc();
      return a_elem(d, g, b, a, z);
    case RKind::star:
      if (g - d != a - b) return RatFunc();
      return a_elem(rho(d), rho(a), rho(b), rho(g), z.inverse());
    case RKind::starstar:
      if (g + d != a + b) return RatFunc();
      return a_elem(rho(a), rho(b), rho(g), rho(d), z);
    case RKind::vee: {
      if (g - d != a - b) return RatFunc();
      const RatFunc q = RatFunc::var(Var::q);
      const int n = static_cast<int>(a.size());
      RatFunc c = (-q).pow(weights::brace(b - d));
      for (std::size_t i = 0; i < b.size(); ++i) c *= pochhammer(q * q, q * q, b[i]) / pochhammer(q * q, q * q, d[i]);
      return c * a_elem(b, g, d, a, (-q).pow(n) / z);
    }
    case RKind::veevee:
      if (g + d != a + b) return RatFunc();
      return a_elem(g, d, a, b, z);
  }
  return RatFunc();
}

std::vector<Space> r_in_spaces(RKind kind, int n, int l, int m) {
  switch (kind) {
    case RKind::plain: return {{SpaceKind::V, n, l}, {SpaceKind::V, n, m}};
    case RKind::star: return {{SpaceKind::Vstar, n, l}, {SpaceKind::V, n, m}};
    case RKind::starstar: return {{SpaceKind::Vstar, n, l}, {SpaceKind::Vstar, n, m}};
    case RKind::vee: return {{SpaceKind::Vvee, n, l}, {SpaceKind::V, n, m}};
    case RKind::veevee: return {{SpaceKind::Vvee, n, l}, {SpaceKind::Vvee, n, m}};
  }
  return {};
}

std::vector<Space> r_out_spaces(RKind kind, int n, int l, int m) {
  auto in = r_in_spaces(kind, n, l, m);
  return {in[1], in[0]};
}

std::vector<std::pair<Composition, Composition>> r_outputs(RKind kind, int n, int l, int m, const Composition& a,
                                                           const Composition& b) {
  std::vector<std::pair<Composition, Composition>> out;
  const bool sum_law = kind == RKind::plain || kind == RKind::starstar || kind == RKind::veevee;
  for (const auto& g : weights::enumerate_B(n, l)) {
    Composition d = sum_law ? a + b - g : g - a + b;
    if (weights::nonnegative(d) && weights::size(d) == m) out.emplace_back(g, std::move(d));
  }
  return out;
}

OperatorTable r_table(RKind kind, int n, int l, int m, const RatFunc& z) {
  OperatorTable t(r_in_spaces(kind, n, l, m), r_out_spaces(kind, n, l, m));
  for (const auto& a : weights::enumerate_B(n, l)) {
    for (const auto& b : weights::enumerate_B(n, m)) {
      for (const auto& [g, d] : r_outputs(kind, n, l, m, a, b)) t.add({a, b}, {d, g}, r_elem(kind, g, d, a, b, z));
    }
  }
  return t;
}

RatFunc special_point(RKind kind, int l, int m) {
  switch (kind) {
    case RKind::plain:
      if (l < m) throw Error("plain special point requires l >= m");
      return qpow(m - l);
    case RKind::star: return qpow(m + l);
    case RKind::starstar:
      if (l > m) throw Error("starstar special point requires l <= m");
      return qpow(l - m);
    default: throw Error("no factorized special point for " + to_string(kind));
  }
}

RatFunc r_special(RKind kind, const Composition& g, const Composition& d, const Composition& a, const Composition& b) {
  const int l = weights::size(a);
  const int m = weights::size(b);
  (void)special_point(kind, l, m);  // precondition check
  const RatFunc q = RatFunc::var(Var::q);
  const RatFunc q2 = q * q;
  using weights::pairing;
  switch (kind) {
    case RKind::plain: {
      if (g + d != a + b || !weights::leq(d, a)) return RatFunc();
      RatFunc r = qpow(pairing(b, a - d) + pairing(a - d, d)) / qbinomial(l, m, q2);
      for (std::size_t i = 0; i < a.size(); ++i) r *= qbinomial(a[i], d[i], q2);
      return r;
    }
    case RKind::star: {
      if (g - d != a - b) return RatFunc();
      RatFunc r = qpow(pairing(d, a) + pairing(g, b)) / qbinomial(l + m, m, q2);
      for (std::size_t i = 0; i < a.size(); ++i) r *= qbinomial(a[i] + d[i], a[i], q2);
      return r;
    }
    case RKind::starstar: {
      if (g + d != a + b || !weights::leq(a, d)) return RatFunc();
      RatFunc r = qpow(pairing(a, b - g) + pairing(b - g, g)) / qbinomial(m, l, q2);
      for (std::size_t i = 0; i < a.size(); ++i) r *= qbinomial(d[i], a[i], q2);
      return r;
    }
    default: break;
  }
  return RatFunc();
}

OperatorTable gauge_transform(RKind kind, const OperatorTable& table, const RatFunc& lam, const RatFunc& mu,
                              const Bilinear& f1, const Linear& f2, const Linear& f3) {
  OperatorTable r(table.in_spaces(), table.out_spaces());
  for (const auto& [in, col] : table.columns()) {
    const Composition& a = in[0];
    const Composition& b = in[1];
    for (const auto& [out, c] : col) {
      const Composition& d = out[0];
      const Composition& g = out[1];
      RatFunc factor;
      switch (kind) {
        case RKind::plain: factor = qpow(f1(d, g) - f1(a, b)) * (lam / mu).pow(f2(g - a)); break;
        case RKind::star: factor = qpow(f1(a, d) - f1(b, g)) * lam.pow(f3(g - a)) * mu.pow(f2(d - b)); break;
        case RKind::starstar: factor = qpow(f1(b, a) - f1(g, d)) * (lam / mu).pow(f3(g - a)); break;
        default: throw Error("gauge replacement is defined for R, Rstar, Rstarstar only");
      }
      r.add(in, out, c * factor);
    }
  }
  return r;
}

}  // namespace reflectq::rmat
