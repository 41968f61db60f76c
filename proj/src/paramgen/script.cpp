#include "reflectq/paramgen/script.hpp"

#include <random>
#include <set>
#include <tuple>

#include "reflectq/exactalg/factored.hpp"
#include "reflectq/exactalg/qcalc.hpp"
#include "reflectq/kmat/kmatrix.hpp"
#include "reflectq/verify/parallel.hpp"

namespace reflectq::paramgen {

using alg::pochhammer;
using alg::qpow;
using alg::Var;
using verify::VerifyReport;
using weights::operator+;
using weights::operator-;

namespace {

const RatFunc& qv() {
  static const RatFunc q = RatFunc::var(Var::q);
  return q;
}

int tri(int s) { return s * (s - 1) / 2; }

}  // namespace

std::string to_string(ScriptKind k) {
  switch (k) {
    case ScriptKind::K: return "K";
    case ScriptKind::R: return "R";
    case ScriptKind::Rstar: return "Rstar";
    case ScriptKind::Rstarstar: return "Rstarstar";
  }
  return "";
}

RatFunc script_k(const RatFunc& lam, const Composition& a, const Composition& g) {
  const RatFunc& q = qv();
  const int sa = weights::size(a), sg = weights::size(g);
  RatFunc r = qpow(weights::pairing(g, a) + tri(sa) + tri(sg)) / pochhammer(-lam * lam, q, sa + sg);
  for (std::size_t i = 0; i < a.size(); ++i) r *= pochhammer(-q, q, a[i] + g[i]);
  return r;
}

RatFunc script_r(ScriptKind kind, const RatFunc& lam, const RatFunc& mu, const Composition& g, const Composition& d,
                 const Composition& a, const Composition& b) {
  const RatFunc& q = qv();
  const RatFunc q2 = q * q;
  using weights::pairing;
  using weights::size;
  switch (kind) {
    case ScriptKind::Rstarstar: {
      if (a + b != g + d) return RatFunc();
      RatFunc phib = rmat::phibar(a, d, lam * lam, mu * mu, q2);
      if (phib.is_zero()) return phib;
      return qpow(pairing(b - g, g) + pairing(a, b - g) + size(a) * size(b) - size(g) * size(d)) *
             (lam * lam).pow(size(d - a)) * phib;
    }
    case ScriptKind::R:
      return script_r(ScriptKind::Rstarstar, mu, lam, weights::rho(b), weights::rho(a), weights::rho(d),
                      weights::rho(g));
    case ScriptKind::Rstar: {
      if (a - b != g - d) return RatFunc();
      RatFunc phib = rmat::phibar(a, a + d, lam * lam, lam * lam * mu * mu, q2);
      if (phib.is_zero()) return phib;
      return qpow(pairing(g, b) + pairing(d, a) + size(a) * size(d) - size(b) * size(g)) * phib;
    }
    case ScriptKind::K: break;
  }
  throw Error("script_r needs an R kind");
}

bool ScriptGauge::is_trivial() const {
  for (const auto& row : f1) {
    for (int v : row) {
      if (v) return false;
    }
  }
  for (int v : f2) {
    if (v) return false;
  }
  for (int v : f3) {
    if (v) return false;
  }
  return true;
}

namespace {

int bilinear(const std::vector<std::vector<int>>& m, const Composition& a, const Composition& b) {
  int s = 0;
  for (std::size_t i = 0; i < m.size() && i < a.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size() && j < b.size(); ++j) s += m[i][j] * a[i] * b[j];
  }
  return s;
}

int linear(const std::vector<int>& v, const Composition& a) {
  int s = 0;
  for (std::size_t i = 0; i < v.size() && i < a.size(); ++i) s += v[i] * a[i];
  return s;
}

}  // namespace

RatFunc ScriptGauge::factor(ScriptKind kind, const RatFunc& lam, const RatFunc& mu, const Composition& g,
                            const Composition& d, const Composition& a, const Composition& b) const {
  switch (kind) {
    case ScriptKind::R:
      return qpow(bilinear(f1, d, g) - bilinear(f1, a, b)) * (lam / mu).pow(linear(f2, g - a));
    case ScriptKind::Rstar:
      return qpow(bilinear(f1, a, d) - bilinear(f1, b, g)) * lam.pow(linear(f3, g - a)) * mu.pow(linear(f2, d - b));
    case ScriptKind::Rstarstar:
      return qpow(bilinear(f1, b, a) - bilinear(f1, g, d)) * (lam / mu).pow(linear(f3, g - a));
    case ScriptKind::K: break;
  }
  return RatFunc(1);
}

std::string to_string(ParamEquation e) {
  switch (e) {
    case ParamEquation::ybe_RRR: return "ybe-RRR";
    case ParamEquation::ybe_sRR: return "ybe-sRR";
    case ParamEquation::ybe_ssR: return "ybe-ssR";
    case ParamEquation::ybe_sss: return "ybe-sss";
    case ParamEquation::reflection: return "reflection";
  }
  return "";
}

ParamEquation param_equation_from_string(const std::string& s) {
  for (auto e : {ParamEquation::ybe_RRR, ParamEquation::ybe_sRR, ParamEquation::ybe_ssR, ParamEquation::ybe_sss,
                 ParamEquation::reflection}) {
    if (to_string(e) == s) return e;
  }
  throw Error("unknown parametric equation: " + s);
}

int slot_count(ParamEquation e) { return e == ParamEquation::reflection ? 2 : 3; }

namespace {

enum Param { kLam = 0, kMu = 1, kNu = 2 };

struct Step {
  ScriptKind kind;
  int p1;  // first parameter
  int p2;  // second parameter (unused for K)
  int slot;
};

struct Sides {
  std::vector<Step> lhs;
  std::vector<Step> rhs;
};

// Steps listed in the order they act (rightmost factor first).
Sides sides_of(ParamEquation eq) {
  using S = ScriptKind;
  if (eq == ParamEquation::reflection) {
    // K1(lam) R*(mu,lam) K1(mu) R(lam,mu) = R**(mu,lam) K1(mu) R*(lam,mu) K1(lam)
    return {{{S::R, kLam, kMu, 0}, {S::K, kMu, kMu, 0}, {S::Rstar, kMu, kLam, 0}, {S::K, kLam, kLam, 0}},
            {{S::K, kLam, kLam, 0}, {S::Rstar, kLam, kMu, 0}, {S::K, kMu, kMu, 0}, {S::Rstarstar, kMu, kLam, 0}}};
  }
  // (1 x A(lam,mu))(B(lam,nu) x 1)(1 x C(mu,nu)) = (C(mu,nu) x 1)(1 x B(lam,nu))(A(lam,mu) x 1)
  S a = S::R, b = S::R, c = S::R;
  switch (eq) {
    case ParamEquation::ybe_RRR: break;
    case ParamEquation::ybe_sRR: a = b = S::Rstar; break;
    case ParamEquation::ybe_ssR: a = S::Rstarstar, b = c = S::Rstar; break;
    case ParamEquation::ybe_sss: a = b = c = S::Rstarstar; break;
    case ParamEquation::reflection: break;
  }
  return {{{c, kMu, kNu, 1}, {b, kLam, kNu, 0}, {a, kLam, kMu, 1}},
          {{a, kLam, kMu, 0}, {b, kLam, kNu, 1}, {c, kMu, kNu, 0}}};
}

void boxes(const Composition& cap, std::size_t pos, Composition& cur, const std::function<void()>& visit) {
  if (pos == cap.size()) {
    visit();
    return;
  }
  for (int v = 0; v <= cap[pos]; ++v) {
    cur[pos] = v;
    boxes(cap, pos + 1, cur, visit);
  }
}


// Factored-denominator versions of the script elements; the sums in the
// equation checks stay gcd-free this way.
using alg::Exponents;
using alg::FactoredFrac;
using alg::Poly;

Exponents var_exp(Var v, int e) {
  Exponents x{};
  x[static_cast<std::size_t>(alg::index_of(v))] = e;
  return x;
}

Exponents add_exp(const Exponents& a, const Exponents& b, int kb = 1) {
  Exponents r{};
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + kb * b[i];
  return r;
}

// f *= (1 - s*M)^power for a Laurent monomial M.
void mul_binomial(FactoredFrac& f, int s, const Exponents& m, int power) {
  Exponents pos{}, neg{};
  for (std::size_t i = 0; i < m.size(); ++i) {
    pos[i] = std::max(m[i], 0);
    neg[i] = std::max(-m[i], 0);
  }
  Poly p = Poly::monomial(1, alg::Monomial::from_exponents(neg)) -
           Poly::monomial(s, alg::Monomial::from_exponents(pos));
  f.mul_factor(p, power);
  f = f * FactoredFrac::laurent(1, add_exp(Exponents{}, neg, -power));
}

// (s*x; base)_m as a factored fraction, memoized per thread.
const FactoredFrac& poch_ff(int s, const Exponents& x, const Exponents& base, int m) {
  thread_local std::map<std::tuple<int, Exponents, Exponents, int>, FactoredFrac> memo;
  auto key = std::make_tuple(s, x, base, m);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  FactoredFrac f(1);
  if (m > 0) {
    f = poch_ff(s, x, base, m - 1);
    mul_binomial(f, s, add_exp(x, base, m - 1), 1);
  }
  return memo.emplace(std::move(key), std::move(f)).first->second;
}

// f *= (s*x; base)_m^power, power = +-1
void mul_poch(FactoredFrac& f, int s, const Exponents& x, const Exponents& base, int m, int power) {
  if (power > 0) {
    f *= poch_ff(s, x, base, m);
    return;
  }
  for (int k = 0; k < m; ++k) mul_binomial(f, s, add_exp(x, base, k), power);
}

FactoredFrac phibar_ff(const Composition& g, const Composition& b, const Exponents& lam, const Exponents& mu) {
  if (!weights::leq(g, b)) return FactoredFrac();
  const Exponents base = var_exp(Var::q, 2);
  const int sg = weights::size(g), sb = weights::size(b);
  FactoredFrac f = poch_ff(1, lam, base, sg);
  mul_poch(f, 1, add_exp(mu, lam, -1), base, sb - sg, 1);
  mul_poch(f, 1, mu, base, sb, -1);
  // q^2-binomials as (q^2; q^2) ratios
  for (std::size_t i = 0; i < g.size(); ++i) {
    mul_poch(f, 1, base, base, b[i], 1);
    mul_poch(f, 1, base, base, g[i], -1);
    mul_poch(f, 1, base, base, b[i] - g[i], -1);
  }
  return f;
}

Var param_var(int p) {
  static const Var vars[3] = {Var::lam, Var::mu, Var::nu};
  return vars[p];
}

FactoredFrac script_k_ff(int lam, const Composition& a, const Composition& g) {
  const int sa = weights::size(a), sg = weights::size(g);
  FactoredFrac f = FactoredFrac::laurent(1, var_exp(Var::q, weights::pairing(g, a) + tri(sa) + tri(sg)));
  const Exponents q1 = var_exp(Var::q, 1);
  for (std::size_t i = 0; i < a.size(); ++i) mul_poch(f, -1, q1, q1, a[i] + g[i], 1);
  mul_poch(f, -1, var_exp(param_var(lam), 2), q1, sa + sg, -1);
  return f;
}

FactoredFrac script_r_ff(ScriptKind kind, int lam, int mu, const Composition& g, const Composition& d,
                         const Composition& a, const Composition& b) {
  using weights::pairing;
  using weights::size;
  const Exponents l2 = var_exp(param_var(lam), 2);
  const Exponents m2 = var_exp(param_var(mu), 2);
  switch (kind) {
    case ScriptKind::Rstarstar: {
      if (a + b != g + d) return FactoredFrac();
      FactoredFrac f = phibar_ff(a, d, l2, m2);
      if (f.is_zero()) return f;
      Exponents e = add_exp(var_exp(Var::q, pairing(b - g, g) + pairing(a, b - g) + size(a) * size(b) -
                                                size(g) * size(d)),
                            l2, size(d - a));
      return f * FactoredFrac::laurent(1, e);
    }
    case ScriptKind::R:
      return script_r_ff(ScriptKind::Rstarstar, mu, lam, weights::rho(b), weights::rho(a), weights::rho(d),
                         weights::rho(g));
    case ScriptKind::Rstar: {
      if (a - b != g - d) return FactoredFrac();
      FactoredFrac f = phibar_ff(a, a + d, l2, add_exp(l2, m2));
      if (f.is_zero()) return f;
      return f * FactoredFrac::laurent(
                     1, var_exp(Var::q, pairing(g, b) + pairing(d, a) + size(a) * size(d) - size(b) * size(g)));
    }
    case ScriptKind::K: break;
  }
  throw Error("script_r needs an R kind");
}

FactoredFrac gauge_ff(const ScriptGauge& gauge, ScriptKind kind, int lam, int mu, const Composition& g,
                      const Composition& d, const Composition& a, const Composition& b) {
  const Var lv = param_var(lam), mv = param_var(mu);
  Exponents e{};
  auto add = [&](Var v, int k) { e[static_cast<std::size_t>(alg::index_of(v))] += k; };
  switch (kind) {
    case ScriptKind::R: {
      add(Var::q, bilinear(gauge.f1, d, g) - bilinear(gauge.f1, a, b));
      int t = linear(gauge.f2, g - a);
      add(lv, t);
      add(mv, -t);
      break;
    }
    case ScriptKind::Rstar:
      add(Var::q, bilinear(gauge.f1, a, d) - bilinear(gauge.f1, b, g));
      add(lv, linear(gauge.f3, g - a));
      add(mv, linear(gauge.f2, d - b));
      break;
    case ScriptKind::Rstarstar: {
      add(Var::q, bilinear(gauge.f1, b, a) - bilinear(gauge.f1, g, d));
      int t = linear(gauge.f3, g - a);
      add(lv, t);
      add(mv, -t);
      break;
    }
    case ScriptKind::K: break;
  }
  return FactoredFrac::laurent(1, e);
}

using Vec = std::map<State, FactoredFrac>;
using CacheKey = std::tuple<int, int, int, Composition, Composition, Composition, Composition>;

class Evaluator {
 public:
  explicit Evaluator(const ScriptGauge& gauge) : gauge_(gauge) {}

  const FactoredFrac& elem(const Step& s, const Composition& g, const Composition& d, const Composition& a,
                           const Composition& b) {
    CacheKey key{static_cast<int>(s.kind), s.p1, s.p2, g, d, a, b};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    FactoredFrac v;
    if (s.kind == ScriptKind::K) {
      v = script_k_ff(s.p1, a, g);
    } else {
      v = script_r_ff(s.kind, s.p1, s.p2, g, d, a, b);
      if (!v.is_zero() && !gauge_.is_trivial()) v *= gauge_ff(gauge_, s.kind, s.p1, s.p2, g, d, a, b);
    }
    return cache_.emplace(std::move(key), std::move(v)).first->second;
  }

 private:
  const ScriptGauge& gauge_;
  std::map<CacheKey, FactoredFrac> cache_;
};

// Applies one step. Steps without finite support (K, and R* in the free
// output d) enumerate their unconstrained output inside `cap`.
Vec apply_step(const Vec& v, const Step& s, const Composition& cap, Evaluator& ev, const std::set<State>& allowed) {
  std::map<State, std::vector<FactoredFrac>> parts;
  const std::size_t k = cap.size();
  auto add = [&](const State& st, const FactoredFrac& c, const FactoredFrac& e) {
    if (allowed.contains(st)) parts[st].push_back(c * e);
  };
  Composition cur(k);
  static const Composition none;
  for (const auto& [st, c] : v) {
    const auto slot = static_cast<std::size_t>(s.slot);
    const Composition& a = st[slot];
    switch (s.kind) {
      case ScriptKind::K:
        boxes(cap, 0, cur, [&] {
          const FactoredFrac& e = ev.elem(s, cur, none, a, none);
          State ns = st;
          ns[slot] = cur;
          add(ns, c, e);
        });
        break;
      case ScriptKind::R:
      case ScriptKind::Rstarstar: {
        const Composition& b = st[slot + 1];
        const Composition total = a + b;
        boxes(total, 0, cur, [&] {
          Composition d = total - cur;
          const FactoredFrac& e = ev.elem(s, cur, d, a, b);
          if (e.is_zero()) return;
          State ns = st;
          ns[slot] = std::move(d);
          ns[slot + 1] = cur;
          add(ns, c, e);
        });
        break;
      }
      case ScriptKind::Rstar: {
        const Composition& b = st[slot + 1];
        boxes(cap, 0, cur, [&] {
          Composition g = a - b + cur;
          if (!weights::nonnegative(g)) return;
          const FactoredFrac& e = ev.elem(s, g, cur, a, b);
          if (e.is_zero()) return;
          State ns = st;
          ns[slot] = cur;
          ns[slot + 1] = std::move(g);
          add(ns, c, e);
        });
        break;
      }
    }
  }
  Vec out;
  for (const auto& [st, terms] : parts) {
    FactoredFrac t = FactoredFrac::sum(terms);
    if (!t.is_zero()) out.emplace(st, std::move(t));
  }
  return out;
}

// Intermediate cap: every component of an index produced by an unbounded step
// is at most (total input weight in that component) + 2 * bound. Per equation:
//   reflection LHS: a1 + b1 = a0 + b0, a2 in [0, a1 + b3], b2 = a1 - a2 + b3;
//   reflection RHS: a2 + b2 = a3 + b3, b1 in [0, a2 + b0], a1 = a2 - b1 + b0;
//   sRR: the free R* outputs are a final slot (<= bound) or meet an R whose
//        outputs sum to <= 2 bound;
//   ssR LHS: b1 <= c1 + c - b <= 2 bound + c; RHS: b2 = a1 + a' - b' <= a + b + bound.
Composition intermediate_cap(const State& in, int bound) {
  Composition cap(in.front().size(), 2 * bound);
  for (const auto& c : in) {
    for (std::size_t i = 0; i < c.size(); ++i) cap[i] += c[i];
  }
  return cap;
}

using Allowed = std::vector<std::set<State>>;

// States that a step can map into `targets` with a nonzero element.
std::set<State> preimage(const std::set<State>& targets, const Step& s, const Composition& cap) {
  std::set<State> out;
  const auto slot = static_cast<std::size_t>(s.slot);
  Composition cur(cap.size());
  for (const auto& y : targets) {
    switch (s.kind) {
      case ScriptKind::K:
        // K elements never vanish
        boxes(cap, 0, cur, [&] {
          State x = y;
          x[slot] = cur;
          out.insert(std::move(x));
        });
        break;
      case ScriptKind::R:
      case ScriptKind::Rstarstar: {
        const Composition& d = y[slot];
        const Composition& g = y[slot + 1];
        const Composition total = g + d;
        boxes(total, 0, cur, [&] {
          Composition b = total - cur;
          if (!script_support(s.kind, g, d, cur, b)) return;
          State x = y;
          x[slot] = cur;
          x[slot + 1] = std::move(b);
          out.insert(std::move(x));
        });
        break;
      }
      case ScriptKind::Rstar: {
        const Composition& d = y[slot];
        const Composition& g = y[slot + 1];
        boxes(cap, 0, cur, [&] {
          Composition b = cur - g + d;
          if (!weights::nonnegative(b) || !weights::leq(b, cap)) return;
          if (!script_support(s.kind, g, d, cur, b)) return;
          State x = y;
          x[slot] = cur;
          x[slot + 1] = std::move(b);
          out.insert(std::move(x));
        });
        break;
      }
    }
  }
  return out;
}

// allowed[i]: states after step i from which one of the outputs is still reachable.
Allowed allowed_states(const std::vector<Step>& steps, const Composition& cap, const std::set<State>& outputs) {
  Allowed a(steps.size());
  a.back() = outputs;
  for (std::size_t i = steps.size() - 1; i > 0; --i) a[i - 1] = preimage(a[i], steps[i], cap);
  return a;
}

Vec run(const std::vector<Step>& steps, const State& in, const Allowed& allowed, int bound, Evaluator& ev) {
  const Composition cap = intermediate_cap(in, bound);
  Vec v{{in, FactoredFrac(1)}};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    v = apply_step(v, steps[i], cap, ev, allowed[i]);
  }
  return v;
}

struct SideAllowed {
  Allowed lhs;
  Allowed rhs;
};

// Inputs with entries <= top share the cap of the all-top input, which bounds
// each of their own caps.
SideAllowed side_allowed(ParamEquation eq, int k, int top_entry, int bound, const std::set<State>& outputs) {
  State top(static_cast<std::size_t>(slot_count(eq)), Composition(static_cast<std::size_t>(k), top_entry));
  const Composition cap = intermediate_cap(top, bound);
  Sides s = sides_of(eq);
  return SideAllowed{allowed_states(s.lhs, cap, outputs), allowed_states(s.rhs, cap, outputs)};
}

std::set<State> state_set(const std::vector<State>& v) { return {v.begin(), v.end()}; }

SidesResult apply_sides_with(ParamEquation eq, const State& in, int bound, const SideAllowed& allowed, Evaluator& ev) {
  Sides s = sides_of(eq);
  return SidesResult{run(s.lhs, in, allowed.lhs, bound, ev), run(s.rhs, in, allowed.rhs, bound, ev)};
}

void check_shape(ParamEquation eq, const State& in) {
  if (static_cast<int>(in.size()) != slot_count(eq)) throw Error("wrong number of tensor slots for " + to_string(eq));
  for (const auto& c : in) {
    if (c.size() != in.front().size()) throw Error("weight vectors of different lengths");
  }
}

int max_entry(const State& st) {
  int m = 0;
  for (const auto& c : st) {
    for (int v : c) m = std::max(m, v);
  }
  return m;
}

std::string state_string(const State& st) {
  std::string s;
  for (std::size_t i = 0; i < st.size(); ++i) s += (i ? "x" : "") + weights::to_string(st[i]);
  return s;
}

void compare(VerifyReport& r, const State& in, const SidesResult& sides, const std::optional<State>& only) {
  std::set<State> keys;
  for (const auto& [st, c] : sides.lhs) keys.insert(st);
  for (const auto& [st, c] : sides.rhs) keys.insert(st);
  for (const auto& st : keys) {
    if (only && st != *only) continue;
    auto li = sides.lhs.find(st);
    auto ri = sides.rhs.find(st);
    FactoredFrac d = (li == sides.lhs.end() ? FactoredFrac() : li->second) -
                     (ri == sides.rhs.end() ? FactoredFrac() : ri->second);
    if (!d.is_zero() && r.failures.size() < verify::kMaxRecordedFailures) {
      r.failures.push_back({state_string(in) + " -> " + state_string(st), d.to_ratfunc().to_string()});
    }
  }
}

std::vector<State> all_states(int slots, int k, int bound) {
  std::vector<Composition> comps;
  Composition cur(static_cast<std::size_t>(k));
  boxes(Composition(static_cast<std::size_t>(k), bound), 0, cur, [&] { comps.push_back(cur); });
  std::vector<State> out{State{}};
  for (int s = 0; s < slots; ++s) {
    std::vector<State> next;
    for (const auto& st : out) {
      for (const auto& c : comps) {
        State ns = st;
        ns.push_back(c);
        next.push_back(std::move(ns));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

alg::FactoredFrac script_elem_factored(ScriptKind kind, int lam, int mu, const Composition& g, const Composition& d,
                                      const Composition& a, const Composition& b) {
  if (lam < 0 || lam > 2 || mu < 0 || mu > 2) throw Error("parameter index must be 0, 1 or 2");
  if (kind == ScriptKind::K) return script_k_ff(lam, a, g);
  return script_r_ff(kind, lam, mu, g, d, a, b);
}

bool script_support(ScriptKind kind, const Composition& g, const Composition& d, const Composition& a,
                    const Composition& b) {
  switch (kind) {
    case ScriptKind::K: return true;
    case ScriptKind::R: return a + b == g + d && weights::leq(d, a);
    case ScriptKind::Rstar: return a - b == g - d && weights::nonnegative(g) && weights::nonnegative(d);
    case ScriptKind::Rstarstar: return a + b == g + d && weights::leq(a, d);
  }
  return false;
}

SidesResult apply_sides(ParamEquation eq, const State& in, int bound, const ScriptGauge& gauge) {
  check_shape(eq, in);
  Evaluator ev(gauge);
  const int k = static_cast<int>(in.front().size());
  auto allowed = side_allowed(eq, k, std::max(bound, max_entry(in)), bound,
                              state_set(all_states(slot_count(eq), k, bound)));
  return apply_sides_with(eq, in, bound, allowed, ev);
}

VerifyReport check_param_eq(ParamEquation eq, const State& in, const State& out, const ScriptGauge& gauge) {
  check_shape(eq, in);
  check_shape(eq, out);
  if (in.front().size() != out.front().size()) throw Error("weight vectors of different lengths");
  const int bound = max_entry(out);
  VerifyReport r;
  r.equation = "param";
  r.params = {{"equation", to_string(eq)}, {"in", state_string(in)}, {"out", state_string(out)}};
  Evaluator ev(gauge);
  auto allowed = side_allowed(eq, static_cast<int>(in.front().size()), std::max(bound, max_entry(in)), bound, {out});
  compare(r, in, apply_sides_with(eq, in, bound, allowed, ev), out);
  r.checked = 1;
  return r;
}

namespace {

// Outputs grouped by their last slot, with the pruning sets of each group.
struct OutputGroups {
  std::vector<SideAllowed> allowed;
  std::size_t outputs = 0;
};

OutputGroups output_groups(ParamEquation eq, int k, int top_entry, int bound) {
  const auto states = all_states(slot_count(eq), k, bound);
  std::map<Composition, std::set<State>> by_last;
  for (const auto& st : states) by_last[st.back()].insert(st);
  OutputGroups g;
  g.outputs = states.size();
  for (const auto& [last, outs] : by_last) g.allowed.push_back(side_allowed(eq, k, top_entry, bound, outs));
  return g;
}

void check_input(VerifyReport& r, ParamEquation eq, const State& in, int bound, const OutputGroups& groups,
                 Evaluator& ev) {
  for (const auto& allowed : groups.allowed) compare(r, in, apply_sides_with(eq, in, bound, allowed, ev), std::nullopt);
  r.checked += groups.outputs;
}

VerifyReport sector_report(ParamEquation eq, const ScriptGauge& gauge) {
  VerifyReport r;
  r.equation = "param";
  r.params = {{"equation", to_string(eq)}};
  if (!gauge.is_trivial()) r.params.emplace_back("gauge", "nontrivial");
  return r;
}

}  // namespace

VerifyReport check_param_input(ParamEquation eq, const State& in, int bound, const ScriptGauge& gauge) {
  check_shape(eq, in);
  VerifyReport r = sector_report(eq, gauge);
  r.params.emplace_back("in", state_string(in));
  r.params.emplace_back("bound", std::to_string(bound));
  const int k = static_cast<int>(in.front().size());
  Evaluator ev(gauge);
  check_input(r, eq, in, bound, output_groups(eq, k, std::max(bound, max_entry(in)), bound), ev);
  return r;
}

VerifyReport check_param_sector(ParamEquation eq, int k, int bound, const ScriptGauge& gauge) {
  const auto states = all_states(slot_count(eq), k, bound);
  const OutputGroups groups = output_groups(eq, k, bound, bound);
  // one element cache per contiguous chunk of inputs
  const std::size_t chunks = std::min<std::size_t>(states.size(), verify::thread_count());
  auto parts = verify::parallel_map(chunks, [&](std::size_t c) {
    VerifyReport part;
    Evaluator ev(gauge);
    for (std::size_t i = c * states.size() / chunks; i < (c + 1) * states.size() / chunks; ++i) {
      check_input(part, eq, states[i], bound, groups, ev);
    }
    return part;
  });
  VerifyReport r = sector_report(eq, gauge);
  r.params.emplace_back("k", std::to_string(k));
  r.params.emplace_back("bound", std::to_string(bound));
  for (const auto& p : parts) r.merge(p);
  if (r.failures.size() > verify::kMaxRecordedFailures) r.failures.resize(verify::kMaxRecordedFailures);
  return r;
}

ScriptGauge random_gauge(int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-2, 2);
  ScriptGauge g;
  const auto kk = static_cast<std::size_t>(k);
  g.f1.assign(kk, std::vector<int>(kk));
  for (auto& row : g.f1) {
    for (auto& v : row) v = d(rng);
  }
  g.f2.resize(kk);
  g.f3.resize(kk);
  for (auto& v : g.f2) v = d(rng);
  for (auto& v : g.f3) v = d(rng);
  // keep every piece non-zero
  if (g.f1[0][0] == 0) g.f1[0][0] = 1;
  for (std::size_t i = 0; i < kk; ++i) {
    if (g.f2[i] == 0) g.f2[i] = 1;
    if (g.f3[i] == 0) g.f3[i] = -1;
  }
  return g;
}

VerifyReport check_gauge_invariance(ParamEquation eq, int k, int bound, const ScriptGauge& gauge) {
  if (eq == ParamEquation::reflection) throw Error("the gauge replacement is stated for the Yang-Baxter equations");
  VerifyReport r = check_param_sector(eq, k, bound, gauge);
  r.equation = "gauge";
  return r;
}

ProbeReport specialization_probe(int k, int l, int m) {
  const int n = k + 1;
  ProbeReport rep;
  rep.k = k;
  rep.l = l;
  rep.m = m;
  const RatFunc lam = qpow(-l);
  const RatFunc mu = qpow(-m);
  std::map<std::string, std::map<std::string, std::set<std::string>>> ratios;  // kind -> sector -> ratios
  auto push = [&](const std::string& kind, const std::string& sector, const std::string& index, const RatFunc& script,
                  const RatFunc& finite) {
    if (script.is_zero() && finite.is_zero()) return;
    RatFunc ratio = finite.is_zero() ? RatFunc() : script / finite;
    ratios[kind][sector].insert(finite.is_zero() ? "support mismatch" : ratio.to_string());
    rep.rows.push_back({kind, sector, index, ratio});
  };
  const auto bl = weights::enumerate_B(n, l);
  const auto bm = weights::enumerate_B(n, m);
  using weights::truncate;
  for (const auto& a : bl) {
    for (const auto& g : bl) {
      push("K", "all", weights::to_string(a) + "->" + weights::to_string(g), script_k(lam, truncate(a), truncate(g)),
           kmat::k_closed(kmat::KClosedForm::special_qml, a, g));
    }
  }
  struct Pairing {
    ScriptKind script;
    rmat::RKind finite;
    bool ok;
  };
  for (const Pairing& pk : {Pairing{ScriptKind::R, rmat::RKind::plain, l >= m},
                            Pairing{ScriptKind::Rstar, rmat::RKind::star, true},
                            Pairing{ScriptKind::Rstarstar, rmat::RKind::starstar, l <= m}}) {
    if (!pk.ok) continue;
    for (const auto& a : bl) {
      for (const auto& b : bm) {
        for (const auto& [g, d] : rmat::r_outputs(pk.finite, n, l, m, a, b)) {
          Composition sec = pk.script == ScriptKind::Rstar ? a - b : a + b;
          push(to_string(pk.script), weights::to_string(sec),
               weights::to_string(a) + "," + weights::to_string(b) + "->" + weights::to_string(g) + "," +
                   weights::to_string(d),
               script_r(pk.script, lam, mu, truncate(g), truncate(d), truncate(a), truncate(b)),
               rmat::r_special(pk.finite, g, d, a, b));
        }
      }
    }
  }
  for (const auto& [kind, sectors] : ratios) {
    bool constant = true;
    for (const auto& [sec, set] : sectors) constant = constant && set.size() == 1 && !set.count("support mismatch");
    rep.constant_per_sector[kind] = constant;
  }
  return rep;
}

}  // namespace reflectq::paramgen
