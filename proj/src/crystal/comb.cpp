#include "reflectq/crystal/comb.hpp"

#include <climits>
#include <mutex>
#include <random>
#include <set>

#include "reflectq/exactalg/qcalc.hpp"
#include "reflectq/kmat/kmatrix.hpp"
#include "reflectq/rmat/rmatrix.hpp"
#include "reflectq/verify/parallel.hpp"

namespace reflectq::crystal {

using alg::Monomial;
using alg::Poly;
using alg::Var;
using verify::VerifyReport;
using weights::operator-;

std::string to_string(CombKind k) {
  switch (k) {
    case CombKind::R: return "r";
    case CombKind::Rvee: return "rvee";
    case CombKind::Rveevee: return "rveevee";
    case CombKind::K: return "k";
  }
  return "?";
}

CombKind comb_kind_from_string(const std::string& s) {
  if (s == "r") return CombKind::R;
  if (s == "rvee") return CombKind::Rvee;
  if (s == "rveevee") return CombKind::Rveevee;
  if (s == "k" || s == "kprime") return CombKind::K;
  throw Error("unknown limit kind '" + s + "'");
}

std::optional<int> z_power(const RatFunc& f) {
  auto bare = [](const Poly& p) -> std::optional<int> {
    if (!p.is_monomial() || p.leading().coeff != 1) return std::nullopt;
    const Monomial& m = p.leading().mono;
    int e = m.exponent(Var::z);
    if (m != Monomial::of(Var::z, e)) return std::nullopt;
    return e;
  };
  if (f.is_zero()) return std::nullopt;
  auto en = bare(f.num());
  auto ed = bare(f.den());
  if (!en || !ed) return std::nullopt;
  return *en - *ed;
}

namespace {

// valuation 2 e_q + w e_z, leading terms with q removed and (-1)^{e_q}
std::pair<int, Poly> p_lowest(const Poly& p, int z_weight) {
  int best = INT_MAX;
  for (const auto& t : p.terms()) best = std::min(best, 2 * t.mono.exponent(Var::q) + z_weight * t.mono.exponent(Var::z));
  std::vector<alg::Term> lead;
  for (const auto& t : p.terms()) {
    int eq = t.mono.exponent(Var::q);
    if (2 * eq + z_weight * t.mono.exponent(Var::z) != best) continue;
    lead.push_back(alg::Term{t.mono.with_exponent(Var::q, 0), eq % 2 ? mpz_class(-t.coeff) : t.coeff});
  }
  return {best, Poly::from_terms(std::move(lead))};
}

}  // namespace

alg::LowestOrder p_order(const RatFunc& f, int z_weight) {
  if (f.is_zero()) throw Error("lowest order of zero is undefined");
  auto [on, ln] = p_lowest(f.num(), z_weight);
  auto [od, ld] = p_lowest(f.den(), z_weight);
  return alg::LowestOrder{on - od, RatFunc::fraction(ln, ld)};
}

RatFunc rvee_normalizer(int n, int l, int m) {
  const Composition a = weights::scaled_unit(n, 1, l);
  const Composition b = weights::scaled_unit(n, 2, m);
  return rmat::r_elem(rmat::RKind::vee, a, b, a, b, RatFunc::var(Var::z));
}

namespace {

template <class Key, class F>
const RatFunc& memo(std::map<Key, RatFunc>& cache, std::mutex& mu, const Key& key, F compute) {
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  RatFunc v = compute();
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(v)).first->second;
}

const RatFunc& cached_rvee_normalizer(int n, int l, int m) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, RatFunc> cache;
  return memo(cache, mu, std::make_tuple(n, l, m), [&] { return rvee_normalizer(n, l, m); });
}

// limit of K'^{l e_1}_{l e_2}: its order and leading coefficient
const alg::LowestOrder& kprime_reference(int n, int l) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, alg::LowestOrder> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({n, l});
    if (it != cache.end()) return it->second;
  }
  const Composition a = weights::scaled_unit(n, 2, l);
  const Composition g = weights::scaled_unit(n, 1, l);
  alg::LowestOrder lo = p_order(kmat::k_elem(a, g), n);
  lo.order += weights::brace(a - g);
  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(n, l), std::move(lo)).first->second;
}

rmat::RKind rkind_of(CombKind k) {
  switch (k) {
    case CombKind::R: return rmat::RKind::plain;
    case CombKind::Rvee: return rmat::RKind::vee;
    case CombKind::Rveevee: return rmat::RKind::veevee;
    case CombKind::K: break;
  }
  throw Error("K has no R matrix kind");
}

std::string state_str(const std::vector<Composition>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " x " : "") + weights::to_string(s[i]);
  return out;
}

}  // namespace

CombPair limit_column(CombKind kind, int n, int l, int m, const Composition& a, const Composition& b) {
  const RatFunc z = RatFunc::var(Var::z);
  std::vector<CombPair> survivors;
  auto consider = [&](std::vector<Composition> out, const alg::LowestOrder& lo) {
    if (lo.order < 0) throw Error("limit diverges at " + state_str(out));
    if (lo.order > 0) return;
    auto e = z_power(lo.leading);
    if (!e) throw Error("limit at " + state_str(out) + " is not a power of z: " + lo.leading.to_string());
    survivors.push_back(CombPair{{}, std::move(out), -*e});
  };
  if (kind == CombKind::K) {
    const alg::LowestOrder& ref = kprime_reference(n, l);
    for (const auto& g : weights::enumerate_B(n, l)) {
      RatFunc k = kmat::k_elem(a, g);
      if (k.is_zero()) continue;
      alg::LowestOrder lo = p_order(k, n);
      lo.order += weights::brace(a - g) - ref.order;
      lo.leading /= ref.leading;
      consider({g}, lo);
    }
  } else {
    const rmat::RKind rk = rkind_of(kind);
    for (const auto& [g, d] : rmat::r_outputs(rk, n, l, m, a, b)) {
      RatFunc e = rmat::r_elem(rk, g, d, a, b, z);
      if (e.is_zero()) continue;
      if (kind == CombKind::Rvee) e /= cached_rvee_normalizer(n, l, m);
      consider({d, g}, kind == CombKind::R ? alg::lowest_order(e, Var::q) : p_order(e));
    }
  }
  std::vector<Composition> in{a};
  if (kind != CombKind::K) in.push_back(b);
  if (survivors.size() != 1) {
    throw Error(std::to_string(survivors.size()) + " outputs survive the limit for input " + state_str(in));
  }
  survivors[0].in = std::move(in);
  return std::move(survivors[0]);
}

CombMap limit_map(CombKind kind, int n, int l, int m) {
  CombMap map{kind, n, l, kind == CombKind::K ? 0 : m, {}};
  std::vector<std::pair<Composition, Composition>> inputs;
  for (const auto& a : weights::enumerate_B(n, l)) {
    if (kind == CombKind::K) {
      inputs.emplace_back(a, Composition{});
      continue;
    }
    for (const auto& b : weights::enumerate_B(n, m)) inputs.emplace_back(a, b);
  }
  map.pairs = verify::parallel_map(inputs.size(), [&](std::size_t i) {
    return limit_column(kind, n, l, m, inputs[i].first, inputs[i].second);
  });
  return map;
}

CombMap comb_k(int n, int l) {
  CombMap map = limit_map(CombKind::K, n, l, 0);
  for (const auto& p : map.pairs) {
    const Composition& a = p.in[0];
    if (p.out[0] != weights::sigma(a) || p.energy != -a[0]) {
      throw Error("K limit at " + weights::to_string(a) + " gives " + weights::to_string(p.out[0]) + " with z^" +
                  std::to_string(-p.energy) + ", expected the cyclic shift with z^" + std::to_string(a[0]));
    }
  }
  return map;
}

bool is_bijection(const CombMap& map) {
  std::set<std::vector<Composition>> seen_in, seen_out;
  for (const auto& p : map.pairs) {
    if (!seen_in.insert(p.in).second || !seen_out.insert(p.out).second) return false;
  }
  std::size_t domain = weights::enumerate_B(map.n, map.l).size();
  if (map.kind != CombKind::K) domain *= weights::enumerate_B(map.n, map.m).size();
  return seen_in.size() == domain;
}

VerifyReport check_energies(const CombMap& map) {
  VerifyReport r;
  r.equation = "energy-" + to_string(map.kind);
  r.params = {{"n", std::to_string(map.n)}, {"l", std::to_string(map.l)}, {"m", std::to_string(map.m)}};
  for (const auto& p : map.pairs) {
    const Composition& a = p.in[0];
    int want = 0;
    switch (map.kind) {
      case CombKind::R: want = weights::energy_Q(0, p.in[1], a); break;
      case CombKind::Rvee: want = weights::energy_P(0, p.in[1], a); break;
      case CombKind::Rveevee: want = weights::energy_Q(0, a, p.in[1]); break;
      case CombKind::K: want = -a[0]; break;
    }
    ++r.checked;
    if (p.energy != want && r.failures.size() < verify::kMaxRecordedFailures) {
      r.failures.push_back({state_str(p.in), "energy " + std::to_string(p.energy) + ", expected " + std::to_string(want)});
    }
  }
  return r;
}

namespace {

using Lookup = std::map<std::vector<Composition>, std::vector<Composition>>;

Lookup lookup_of(const CombMap& map) {
  Lookup t;
  for (const auto& p : map.pairs) t.emplace(p.in, p.out);
  return t;
}

}  // namespace

VerifyReport check_set_ybe(CombKind kind, int n, int l1, int l2, int l3) {
  if (kind != CombKind::R && kind != CombKind::Rveevee) throw Error("set Yang-Baxter check needs r or rveevee");
  VerifyReport r;
  r.equation = "set-ybe-" + to_string(kind);
  r.params = {{"n", std::to_string(n)}, {"l1", std::to_string(l1)}, {"l2", std::to_string(l2)}, {"l3", std::to_string(l3)}};
  const Lookup r12 = lookup_of(limit_map(kind, n, l1, l2));
  const Lookup r13 = lookup_of(limit_map(kind, n, l1, l3));
  const Lookup r23 = lookup_of(limit_map(kind, n, l2, l3));
  for (const auto& a : weights::enumerate_B(n, l1)) {
    for (const auto& b : weights::enumerate_B(n, l2)) {
      for (const auto& c : weights::enumerate_B(n, l3)) {
        // (a, b, c) -> (c, b, a) in both orders
        auto s1 = r12.at({a, b});
        auto s2 = r13.at({s1[1], c});
        auto s3 = r23.at({s1[0], s2[0]});
        std::vector<Composition> lhs{s3[0], s3[1], s2[1]};
        auto t1 = r23.at({b, c});
        auto t2 = r13.at({a, t1[0]});
        auto t3 = r12.at({t2[1], t1[1]});
        std::vector<Composition> rhs{t2[0], t3[0], t3[1]};
        ++r.checked;
        if (lhs != rhs && r.failures.size() < verify::kMaxRecordedFailures) {
          r.failures.push_back({state_str({a, b, c}), state_str(lhs) + " vs " + state_str(rhs)});
        }
      }
    }
  }
  return r;
}

SetReEvaluator::SetReEvaluator(int n) : n_(n) {}

const CombPair& SetReEvaluator::column(CombKind kind, int l, int m, const Composition& a, const Composition& b) {
  auto key = std::make_tuple(static_cast<int>(kind), l, m, a, b);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, limit_column(kind, n_, l, m, a, b)).first;
  return it->second;
}

SetReChains SetReEvaluator::chains(int l, int m, const Composition& a, const Composition& b) {
  SetReChains c;
  // K'_1 R^vee((xy)^{-1}) K'_1 R(x/y), rightmost first
  std::vector<Composition> s{a, b};
  c.lhs.push_back(s);
  s = column(CombKind::R, l, m, s[0], s[1]).out;
  c.lhs.push_back(s);
  s[0] = column(CombKind::K, m, 0, s[0], {}).out[0];
  c.lhs.push_back(s);
  s = column(CombKind::Rvee, m, l, s[0], s[1]).out;
  c.lhs.push_back(s);
  s[0] = column(CombKind::K, l, 0, s[0], {}).out[0];
  c.lhs.push_back(s);
  // R^veevee(x/y) K'_1 R^vee((xy)^{-1}) K'_1
  s = {a, b};
  c.rhs.push_back(s);
  s[0] = column(CombKind::K, l, 0, s[0], {}).out[0];
  c.rhs.push_back(s);
  s = column(CombKind::Rvee, l, m, s[0], s[1]).out;
  c.rhs.push_back(s);
  s[0] = column(CombKind::K, m, 0, s[0], {}).out[0];
  c.rhs.push_back(s);
  s = column(CombKind::Rveevee, m, l, s[0], s[1]).out;
  c.rhs.push_back(s);
  return c;
}

VerifyReport check_set_re(int n, int l, int m, const SetReMode& mode) {
  VerifyReport r;
  r.equation = "set-reflection";
  r.params = {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"m", std::to_string(m)}};
  const auto bl = weights::enumerate_B(n, l);
  const auto bm = weights::enumerate_B(n, m);
  std::vector<std::pair<Composition, Composition>> inputs;
  if (mode.exhaustive) {
    r.params.emplace_back("mode", "exhaustive");
    for (const auto& a : bl) {
      for (const auto& b : bm) inputs.emplace_back(a, b);
    }
  } else {
    r.params.emplace_back("mode", "sample");
    r.params.emplace_back("samples", std::to_string(mode.count));
    r.params.emplace_back("seed", std::to_string(mode.seed));
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<std::size_t> ia(0, bl.size() - 1), ib(0, bm.size() - 1);
    for (int i = 0; i < mode.count; ++i) {
      const auto& a = bl[ia(rng)];
      inputs.emplace_back(a, bm[ib(rng)]);
    }
  }
  SetReEvaluator ev(n);
  for (const auto& [a, b] : inputs) {
    SetReChains c = ev.chains(l, m, a, b);
    ++r.checked;
    if (c.lhs.back() != c.rhs.back() && r.failures.size() < verify::kMaxRecordedFailures) {
      r.failures.push_back({state_str({a, b}), state_str(c.lhs.back()) + " vs " + state_str(c.rhs.back())});
    }
  }
  return r;
}

bool ConjectureReport::supported() const {
  for (const auto& e : entries) {
    if (!e.match) return false;
  }
  return true;
}

std::string ConjectureReport::status() const { return supported() ? "SUPPORTED" : "REFUTED"; }

ConjectureReport check_k_limit_conjecture(int n, int l) {
  ConjectureReport rep;
  rep.n = n;
  rep.l = l;
  const auto basis = weights::enumerate_B(n, l);
  std::vector<std::pair<Composition, Composition>> idx;
  for (const auto& a : basis) {
    for (const auto& g : basis) idx.emplace_back(a, g);
  }
  rep.entries = verify::parallel_map(idx.size(), [&](std::size_t i) {
    const auto& [a, g] = idx[i];
    ConjectureEntry e{a, g, "0", weights::energy_Q(0, g, a), false};
    RatFunc k = kmat::k_elem(a, g);
    if (k.is_zero()) return e;
    alg::LowestOrder lo = alg::lowest_order(k, Var::q);
    if (lo.order < 0) {
      e.limit = "diverges";
    } else if (lo.order == 0) {
      e.limit = lo.leading.to_string();
      e.match = z_power(lo.leading) == -e.predicted;
    }
    return e;
  });
  return rep;
}

}  // namespace reflectq::crystal
