#include "reflectq/verify/checks.hpp"

#include <map>
#include <random>
#include <set>

#include "reflectq/exactalg/qcalc.hpp"
#include "reflectq/kmat/kmatrix.hpp"
#include "reflectq/kmat/oracle.hpp"
#include "reflectq/reps/modules.hpp"
#include "reflectq/verify/parallel.hpp"

namespace reflectq::verify {

using alg::RatFunc;
using alg::Var;
using reps::Label;
using reps::OperatorTable;
using reps::Space;
using reps::SpaceKind;
using rmat::RKind;
using weights::Composition;

namespace {

void record(VerifyReport& r, std::string index, std::string difference) {
  if (r.failures.size() < kMaxRecordedFailures) r.failures.push_back(Failure{std::move(index), std::move(difference)});
  else if (r.failures.size() == kMaxRecordedFailures) r.failures.push_back(Failure{"...", "further failures omitted"});
}

struct Step {
  OperatorTable op;
  std::size_t pos;
};

// Applies the steps right to left in the order given (first step acts first).
OperatorTable run_chain(const std::vector<Space>& in, const std::vector<Step>& steps) {
  OperatorTable acc = OperatorTable::identity(in);
  std::vector<Space> spaces = in;
  for (const auto& s : steps) {
    OperatorTable e = s.op.embed(spaces, s.pos);
    acc = e * acc;
    spaces = e.out_spaces();
  }
  return acc;
}

OperatorTable at_spectral(const OperatorTable& t, const RatFunc& value) {
  std::vector<alg::Binding> b{{Var::z, value}};
  return t.map_entries([&](const RatFunc& c) { return alg::substitute(c, b); });
}

std::string param(int v) { return std::to_string(v); }

const RatFunc& xv() {
  static const RatFunc x = RatFunc::var(Var::x);
  return x;
}
const RatFunc& yv() {
  static const RatFunc y = RatFunc::var(Var::y);
  return y;
}

}  // namespace

VerifyReport compare_tables(const std::string& equation, const OperatorTable& lhs, const OperatorTable& rhs) {
  VerifyReport r;
  r.equation = equation;
  if (lhs.in_spaces() != rhs.in_spaces() || lhs.out_spaces() != rhs.out_spaces()) {
    record(r, "spaces", "the two sides act between different spaces");
    return r;
  }
  const auto ins = reps::tensor_basis(lhs.in_spaces());
  const auto outs = reps::tensor_basis(lhs.out_spaces());
  r.checked = ins.size() * outs.size();
  static const OperatorTable::Column empty;
  for (const auto& in : ins) {
    auto li = lhs.columns().find(in);
    auto ri = rhs.columns().find(in);
    const auto& lc = li == lhs.columns().end() ? empty : li->second;
    const auto& rc = ri == rhs.columns().end() ? empty : ri->second;
    std::set<Label> keys;
    for (const auto& [o, c] : lc) keys.insert(o);
    for (const auto& [o, c] : rc) keys.insert(o);
    for (const auto& o : keys) {
      RatFunc d = lhs.entry(in, o) - rhs.entry(in, o);
      if (!d.is_zero()) record(r, reps::to_string(in) + " -> " + reps::to_string(o), d.to_string());
    }
  }
  return r;
}

std::string to_string(YbeSequence s) {
  switch (s) {
    case YbeSequence::VVV: return "VVV";
    case YbeSequence::sVV: return "sVV";
    case YbeSequence::ssV: return "ssV";
    case YbeSequence::sss: return "sss";
    case YbeSequence::vVV: return "vVV";
    case YbeSequence::vvV: return "vvV";
    case YbeSequence::vvv: return "vvv";
  }
  return "";
}

YbeSequence ybe_sequence_from_string(const std::string& s) {
  for (auto v : {YbeSequence::VVV, YbeSequence::sVV, YbeSequence::ssV, YbeSequence::sss, YbeSequence::vVV,
                 YbeSequence::vvV, YbeSequence::vvv}) {
    if (to_string(v) == s) return v;
  }
  throw Error("unknown Yang-Baxter sequence: " + s);
}

VerifyReport check_ybe(YbeSequence seq, int n, int l1, int l2, int l3) {
  // R kinds (A, B, C) of (1 x A(x))(B(xy) x 1)(1 x C(y))
  RKind a = RKind::plain, b = RKind::plain, c = RKind::plain;
  SpaceKind s1 = SpaceKind::V, s2 = SpaceKind::V, s3 = SpaceKind::V;
  switch (seq) {
    case YbeSequence::VVV: break;
    case YbeSequence::sVV: a = b = RKind::star, s1 = SpaceKind::Vstar; break;
    case YbeSequence::ssV:
      a = RKind::starstar, b = c = RKind::star, s1 = s2 = SpaceKind::Vstar;
      break;
    case YbeSequence::sss: a = b = c = RKind::starstar, s1 = s2 = s3 = SpaceKind::Vstar; break;
    case YbeSequence::vVV: a = b = RKind::vee, s1 = SpaceKind::Vvee; break;
    case YbeSequence::vvV:
      a = RKind::veevee, b = c = RKind::vee, s1 = s2 = SpaceKind::Vvee;
      break;
    case YbeSequence::vvv: a = b = c = RKind::veevee, s1 = s2 = s3 = SpaceKind::Vvee; break;
  }
  const RatFunc& x = xv();
  const RatFunc& y = yv();
  const std::vector<Space> in{{s1, n, l1}, {s2, n, l2}, {s3, n, l3}};
  OperatorTable r12 = rmat::r_table(a, n, l1, l2, x);
  OperatorTable r13 = rmat::r_table(b, n, l1, l3, x * y);
  OperatorTable r23 = rmat::r_table(c, n, l2, l3, y);
  OperatorTable lhs = run_chain(in, {{r23, 1}, {r13, 0}, {r12, 1}});
  OperatorTable rhs = run_chain(in, {{r12, 0}, {r13, 1}, {r23, 0}});
  VerifyReport r = compare_tables("ybe", lhs, rhs);
  r.params = {{"sequence", to_string(seq)}, {"n", param(n)}, {"l1", param(l1)}, {"l2", param(l2)}, {"l3", param(l3)}};
  return r;
}

VerifyReport check_reflection(Gauge gauge, int n, int l, int m) {
  const RatFunc& x = xv();
  const RatFunc& y = yv();
  const bool vee = gauge == Gauge::vee;
  auto over = [&](const OperatorTable& t) { return vee ? reps::to_p(t) : t; };
  OperatorTable kl = vee ? kmat::kprime_table(n, l) : kmat::k_table(n, l);
  OperatorTable km = vee ? kmat::kprime_table(n, m) : kmat::k_table(n, m);
  OperatorTable klx = at_spectral(kl, x);
  OperatorTable kmy = at_spectral(km, y);
  const RKind mixed = vee ? RKind::vee : RKind::star;
  const RKind dual = vee ? RKind::veevee : RKind::starstar;
  OperatorTable r_lm = over(rmat::r_table(RKind::plain, n, l, m, x / y));
  OperatorTable rmix_ml = over(rmat::r_table(mixed, n, m, l, (x * y).inverse()));
  OperatorTable rmix_lm = over(rmat::r_table(mixed, n, l, m, (x * y).inverse()));
  OperatorTable rdual_ml = over(rmat::r_table(dual, n, m, l, x / y));
  const std::vector<Space> in{{SpaceKind::V, n, l}, {SpaceKind::V, n, m}};
  OperatorTable lhs = run_chain(in, {{r_lm, 0}, {kmy, 0}, {rmix_ml, 0}, {klx, 0}});
  OperatorTable rhs = run_chain(in, {{klx, 0}, {rmix_lm, 0}, {kmy, 0}, {rdual_ml, 0}});
  VerifyReport r = compare_tables("reflection", lhs, rhs);
  r.params = {{"gauge", vee ? "vee" : "star"}, {"n", param(n)}, {"l", param(l)}, {"m", param(m)}};
  return r;
}

VerifyReport check_intertwining_r(RKind kind, int n, int l, int m) {
  const RatFunc& x = xv();
  const RatFunc& y = yv();
  OperatorTable table = rmat::r_table(kind, n, l, m, x / y);
  auto in = rmat::r_in_spaces(kind, n, l, m);
  auto out = rmat::r_out_spaces(kind, n, l, m);
  const std::vector<reps::Gen> gens{reps::Gen::e, reps::Gen::f, reps::Gen::k};
  auto parts = parallel_map(static_cast<std::size_t>(n) * gens.size(), [&](std::size_t w) {
    const int i = static_cast<int>(w / gens.size());
    const reps::Gen g = gens[w % gens.size()];
    OperatorTable lhs = reps::tensor_act(out, {y, x}, g, i) * table;
    OperatorTable rhs = table * reps::tensor_act(in, {x, y}, g, i);
    VerifyReport part = compare_tables("", lhs, rhs);
    for (auto& f : part.failures) f.index = reps::to_string(g) + std::to_string(i) + ": " + f.index;
    return part;
  });
  VerifyReport r;
  r.equation = "intertwining";
  r.params = {{"target", rmat::to_string(kind)}, {"n", param(n)}, {"l", param(l)}, {"m", param(m)}};
  for (const auto& p : parts) r.merge(p);
  return r;
}

VerifyReport check_intertwining_k(int n, int l) {
  const auto basis = weights::enumerate_B(n, l);
  std::map<std::pair<Composition, Composition>, RatFunc> k;
  for (const auto& a : basis) {
    for (const auto& g : basis) k[{a, g}] = kmat::k_elem(a, g);
  }
  auto parts = parallel_map(static_cast<std::size_t>(n), [&](std::size_t w) {
    const int i = static_cast<int>(w);
    VerifyReport part;
    for (const auto& a : basis) {
      for (const auto& g : basis) {
        RatFunc s;
        for (const auto& t : kmat::intertwining_relation(i, a, g)) {
          auto it = k.find({t.a, t.g});
          if (it != k.end()) s += t.coeff * it->second;
        }
        ++part.checked;
        if (!s.is_zero()) {
          record(part, "i=" + std::to_string(i) + " a=" + weights::to_string(a) + " g=" + weights::to_string(g),
                 s.to_string());
        }
      }
    }
    return part;
  });
  VerifyReport r;
  r.equation = "intertwining";
  r.params = {{"target", "K"}, {"n", param(n)}, {"l", param(l)}};
  for (const auto& p : parts) r.merge(p);
  return r;
}

VerifyReport check_intertwining_kprime(int n, int l) {
  const RatFunc z = RatFunc::var(Var::z);
  OperatorTable k = kmat::kprime_table(n, l);
  auto parts = parallel_map(static_cast<std::size_t>(n), [&](std::size_t w) {
    const int i = static_cast<int>(w);
    auto lhs = k * reps::act_coideal(SpaceKind::V, n, l, reps::Coideal::bprime, i, z);
    auto rhs = reps::act_coideal(SpaceKind::Vvee, n, l, reps::Coideal::bprime, i, z.inverse()) * k;
    VerifyReport part = compare_tables("", lhs, rhs);
    for (auto& f : part.failures) f.index = "b'" + std::to_string(i) + ": " + f.index;
    return part;
  });
  VerifyReport r;
  r.equation = "intertwining";
  r.params = {{"target", "Kprime"}, {"n", param(n)}, {"l", param(l)}};
  for (const auto& p : parts) r.merge(p);
  return r;
}

VerifyReport check_local_relation(int bound) {
  using qboson::BosonElement;
  const RatFunc q = RatFunc::var(Var::q);
  std::map<std::pair<int, int>, BosonElement> g;
  for (int i = 0; i <= bound + 1; ++i) {
    for (int j = 0; j <= bound + 1; ++j) g[{i, j}] = kmat::g_op(i, j);
  }
  // G^j_i with an index outside Z_+ only appears with a vanishing coefficient
  auto G = [&](int i, int j) { return (i < 0 || j < 0) ? BosonElement() : g.at({i, j}); };
  const int side = bound + 1;
  const std::size_t total = static_cast<std::size_t>(side) * side * side * side;
  auto parts = parallel_map(total, [&](std::size_t w) {
    const int a1 = static_cast<int>(w % side);
    const int a2 = static_cast<int>(w / side % side);
    const int g1 = static_cast<int>(w / side / side % side);
    const int g2 = static_cast<int>(w / side / side / side);
    using alg::qnumber;
    using alg::qpow;
    BosonElement lhs = (G(a1 + 1, g1) * G(a2 - 1, g2)).scaled(-qpow(-g1) * qnumber(a2)) +
                       (G(a1 - 1, g1) * G(a2 + 1, g2)).scaled(qpow(g1 + a1 - a2) * qnumber(a1)) +
                       (G(a1, g1) * G(a2, g2)).scaled(qpow(a1 - a2 + 1) / (1 - q));
    BosonElement rhs = (G(a1, g1 + 1) * G(a2, g2 - 1)).scaled(qpow(a2 - g1 + g2) * qnumber(g2)) -
                       (G(a1, g1 - 1) * G(a2, g2 + 1)).scaled(qpow(-a2) * qnumber(g1)) +
                       (G(a1, g1) * G(a2, g2)).scaled(qpow(-g1 + g2 + 1) / (1 - q));
    VerifyReport part;
    part.checked = 1;
    BosonElement d = lhs - rhs;
    if (!d.is_zero()) {
      record(part,
             "a=(" + std::to_string(a1) + "," + std::to_string(a2) + ") g=(" + std::to_string(g1) + "," +
                 std::to_string(g2) + ")",
             d.to_string());
    }
    return part;
  });
  VerifyReport r;
  r.equation = "local";
  r.params = {{"bound", param(bound)}};
  for (const auto& p : parts) r.merge(p);
  return r;
}

namespace {

using Series = std::vector<mpq_class>;

struct Degenerate {};

// 2phi1(a, b; c; t w) truncated at w^order; throws Degenerate on a vanishing denominator.
Series phi_series(const mpq_class& a, const mpq_class& b, const mpq_class& c, const mpq_class& q, const mpq_class& t,
                  int order) {
  Series s(static_cast<std::size_t>(order) + 1);
  mpq_class coeff = 1;
  mpq_class qm = 1;  // q^m
  mpq_class tm = 1;  // t^m
  for (int m = 0; m <= order; ++m) {
    s[static_cast<std::size_t>(m)] = coeff * tm;
    mpq_class den = (1 - qm * q) * (1 - c * qm);
    if (den == 0) throw Degenerate{};
    coeff *= (1 - a * qm) * (1 - b * qm) / den;
    qm *= q;
    tm *= t;
  }
  return s;
}

Series mul(const Series& a, const Series& b) {
  Series r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < r.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Series scaled(Series s, const mpq_class& c) {
  for (auto& v : s) v *= c;
  return s;
}

mpq_class random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 99);
  std::uniform_int_distribution<int> sign(0, 1);
  mpq_class v(num(rng), num(rng));
  v.canonicalize();
  return sign(rng) ? mpq_class(-v) : v;
}

// Five-term combination; all coefficients must vanish.
Series five_term_combination(const mpq_class& q, const mpq_class& u1, const mpq_class& u2, const mpq_class& v1,
                       const mpq_class& v2, int order) {
  const mpq_class one = 1;
  const mpq_class kappa = u1 * u1 / v1 / (u2 * u2) * v2;  // y = kappa w
  const mpq_class c = u1 * u1 / (q * v1);
  auto poch2 = [&](const mpq_class& x) -> mpq_class { return (1 - x) * (1 - x * q); };
  Series cw2(static_cast<std::size_t>(order) + 1);  // (c w; q)_2
  cw2[0] = 1;
  if (order >= 1) cw2[1] = -c * (1 + q);
  if (order >= 2) cw2[2] = c * c * q;
  Series cw1(static_cast<std::size_t>(order) + 1);  // 1 - c w
  cw1[0] = 1;
  if (order >= 1) cw1[1] = -c;
  auto pw = [&](const mpq_class& a, const mpq_class& cc) { return phi_series(a, -a, cc, q, one, order); };
  auto py = [&](const mpq_class& a, const mpq_class& cc) { return phi_series(a, -a, cc, q, kappa, order); };

  Series total(static_cast<std::size_t>(order) + 1);
  auto add = [&](const Series& s) {
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += s[i];
  };
  add(scaled(mul(cw2, mul(pw(u1, -v1 / q), py(q * u2, -q * v2))), u1 * (u2 - 1 / u2) * poch2(-1 / v1)));
  add(scaled(mul(pw(u1, -q * v1), py(u2 / q, -v2 / q)), u2 / v1 * (u1 / v1 - v1 / u1) * poch2(-1 / v2)));
  add(scaled(mul(pw(u1 / q, -v1 / q), py(u2, -q * v2)), -u1 / v2 * (u2 / v2 - v2 / u2) * poch2(-1 / v1)));
  add(scaled(mul(cw2, mul(pw(q * u1, -q * v1), py(u2, -v2 / q))), -u2 * (u1 - 1 / u1) * poch2(-1 / v2)));
  add(scaled(mul(cw1, mul(pw(u1, -v1), py(u2, -v2))),
             -(1 + q) * u1 * u2 * (1 / v1 - 1 / v2) * (1 + 1 / v1) * (1 + 1 / v2)));
  return total;
}

}  // namespace

VerifyReport check_series_identity(int order, int samples, std::uint64_t seed) {
  if (order < 0 || samples < 0) throw Error("order and sample count must be non-negative");
  std::mt19937_64 rng(seed);
  VerifyReport r;
  r.equation = "series-identity";
  r.params = {{"order", param(order)}, {"samples", param(samples)}, {"seed", std::to_string(seed)}};
  for (int s = 0; s < samples; ++s) {
    for (int attempt = 0;; ++attempt) {
      if (attempt == 100) throw Error("could not draw a non-degenerate sample");
      mpq_class q = random_rational(rng), u1 = random_rational(rng), u2 = random_rational(rng),
                v1 = random_rational(rng), v2 = random_rational(rng);
      if (q == 1 || q == -1) continue;
      Series total;
      try {
        total = five_term_combination(q, u1, u2, v1, v2, order);
      } catch (const Degenerate&) {
        continue;
      }
      for (int i = 0; i <= order; ++i) {
        ++r.checked;
        if (total[static_cast<std::size_t>(i)] != 0) {
          record(r,
                 "sample " + std::to_string(s) + " (q,u1,u2,v1,v2)=(" + q.get_str() + "," + u1.get_str() + "," +
                     u2.get_str() + "," + v1.get_str() + "," + v2.get_str() + ") w^" + std::to_string(i),
                 total[static_cast<std::size_t>(i)].get_str());
        }
      }
      break;
    }
  }
  return r;
}

VerifyReport check_oracle(int n, int l, int samples, std::uint64_t seed) {
  const auto basis = weights::enumerate_B(n, l);
  std::map<std::pair<Composition, Composition>, RatFunc> k;
  for (const auto& a : basis) {
    for (const auto& g : basis) k[{a, g}] = kmat::k_elem(a, g);
  }
  // Points are drawn up front so the result does not depend on scheduling.
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::pair<mpq_class, mpq_class>>> candidates(static_cast<std::size_t>(samples));
  for (auto& c : candidates) {
    for (int t = 0; t < 20; ++t) c.emplace_back(random_rational(rng), random_rational(rng));
  }
  auto parts = parallel_map(candidates.size(), [&](std::size_t s) {
    VerifyReport part;
    for (const auto& [q0, z0] : candidates[s]) {
      if (q0 == 1 || q0 == -1) continue;
      alg::Point at{};
      at[static_cast<std::size_t>(alg::index_of(Var::q))] = q0;
      at[static_cast<std::size_t>(alg::index_of(Var::z))] = z0;
      std::map<std::pair<Composition, Composition>, mpq_class> expect;
      try {
        for (const auto& [key, f] : k) expect[key] = f.evaluate(at);
      } catch (const Error&) {
        continue;  // pole of the trace formula at this point
      }
      kmat::OracleResult res;
      try {
        res = kmat::intertwiner_oracle(n, l, q0, z0);
      } catch (const Error&) {
        continue;  // solution space is not one-dimensional here
      }
      const std::string where = "(q,z)=(" + q0.get_str() + "," + z0.get_str() + ")";
      ++part.checked;
      if (res.rank != res.unknowns - 1) record(part, where, "nullity " + std::to_string(res.unknowns - res.rank));
      for (const auto& [key, v] : res.entries) {
        ++part.checked;
        const mpq_class& e = expect.at(key);
        if (e != v) {
          record(part, where + " a=" + weights::to_string(key.first) + " g=" + weights::to_string(key.second),
                 mpq_class(e - v).get_str());
        }
      }
      return part;
    }
    record(part, "sample " + std::to_string(s), "no non-degenerate point found");
    return part;
  });
  VerifyReport r;
  r.equation = "oracle";
  r.params = {{"n", param(n)}, {"l", param(l)}, {"samples", param(samples)}, {"seed", std::to_string(seed)}};
  for (const auto& p : parts) r.merge(p);
  return r;
}

}  // namespace reflectq::verify
