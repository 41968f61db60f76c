#include "reflectq/exactalg/gcd.hpp"

#include <algorithm>
#include <random>

namespace reflectq::alg {

namespace {

// ------------------------------------------------------------ modular images

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(t & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(t >> 61);
  std::uint64_t r = lo + hi;
  return r >= kPrime ? r - kPrime : r;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r >= kPrime ? r - kPrime : r;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

std::uint64_t reduce(const mpz_class& c) {
  std::uint64_t r = mpz_fdiv_ui(c.get_mpz_t(), kPrime);
  return r;
}

using UPolyMod = std::vector<std::uint64_t>;

void trim(UPolyMod& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Image of `f` in Z_P[v] after substituting `point` for all other variables.
UPolyMod image(const Poly& f, Var v, const std::array<std::uint64_t, kNumVars>& point) {
  int deg = f.degree(v);
  UPolyMod out(static_cast<std::size_t>(deg) + 1, 0);
  for (const auto& t : f.terms()) {
    std::uint64_t c = reduce(t.coeff);
    for (Var u : kAllVars) {
      if (u == v) continue;
      int e = t.mono.exponent(u);
      if (e) c = mulmod(c, powmod(point[static_cast<std::size_t>(index_of(u))], static_cast<std::uint64_t>(e)));
    }
    auto& slot = out[static_cast<std::size_t>(t.mono.exponent(v))];
    slot = addmod(slot, c);
  }
  trim(out);
  return out;
}

int gcd_degree(UPolyMod a, UPolyMod b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // a <- a mod b
    std::uint64_t inv = invmod(b.back());
    while (a.size() >= b.size()) {
      std::uint64_t f = mulmod(a.back(), inv);
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = submod(a[off + i], mulmod(f, b[i]));
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// ------------------------------------------------------------ heuristic gcd

mpz_class smod(const mpz_class& c, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

Poly interpolate(Poly image, Var v, const mpz_class& xi) {
  std::vector<Term> out;
  int i = 0;
  while (!image.is_zero()) {
    std::vector<Term> digit;
    digit.reserve(image.size());
    for (const auto& t : image.terms()) {
      mpz_class r = smod(t.coeff, xi);
      if (r != 0) digit.push_back(Term{t.mono, r});
    }
    Poly g = Poly::from_sorted_unchecked(digit);
    for (const auto& t : digit) out.push_back(Term{t.mono * Monomial::of(v, i), t.coeff});
    image = (image - g).divexact(xi);
    ++i;
  }
  return Poly::from_terms(std::move(out));
}

Var first_var(VarMask m) {
  for (Var v : kAllVars) {
    if (m & bit(v)) return v;
  }
  throw Error("empty variable mask");
}

std::optional<GcdResult> heu(const Poly& f, const Poly& g) {
  VarMask vs = f.vars() | g.vars();
  mpz_class cf = f.content();
  mpz_class cg = g.content();
  mpz_class ic;
  mpz_gcd(ic.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  if (vs == 0) {
    return GcdResult{Poly(ic), f.divexact(ic), g.divexact(ic)};
  }
  Poly f1 = f.divexact(ic);
  Poly g1 = g.divexact(ic);
  if (f1.is_constant() || g1.is_constant()) return GcdResult{Poly(ic), f1, g1};

  mpz_class fn = f1.max_norm();
  mpz_class gn = g1.max_norm();
  mpz_class b = 2 * std::min(fn, gn) + 29;
  mpz_class sb = sqrt(b);
  mpz_class xi = std::min(b, mpz_class(99 * sb));
  mpz_class alt = 2 * std::min(mpz_class(fn / abs(f1.leading().coeff)), mpz_class(gn / abs(g1.leading().coeff))) + 2;
  if (alt > xi) xi = alt;

  Var v = first_var(vs);
  for (int attempt = 0; attempt < 6; ++attempt) {
    Poly ff = f1.evaluate_at(v, xi);
    Poly gg = g1.evaluate_at(v, xi);
    if (!ff.is_zero() && !gg.is_zero()) {
      auto sub = heu(ff, gg);
      if (!sub) return std::nullopt;
      Poly h = interpolate(sub->gcd, v, xi);
      Poly ca = interpolate(sub->cof_a, v, xi);
      Poly cb = interpolate(sub->cof_b, v, xi);
      bool ok = (h * ca == f1) && (h * cb == g1);
      if (!ok) {
        mpz_class hc = h.content();
        if (hc != 0) h = h.divexact(hc);
        if (!h.is_zero()) {
          auto qa = f1.divide_exact(h);
          if (qa) {
            auto qb = g1.divide_exact(h);
            if (qb) {
              ca = std::move(*qa);
              cb = std::move(*qb);
              ok = true;
            }
          }
        }
      }
      if (ok) {
        if (h.sign() < 0) {
          h = -h;
          ca = -ca;
          cb = -cb;
        }
        return GcdResult{h.scaled(ic), std::move(ca), std::move(cb)};
      }
    }
    mpz_class s = sqrt(mpz_class(sqrt(xi)));
    xi = (73794 * xi * s) / 27011;
  }
  return std::nullopt;
}

// ------------------------------------------------------------ PRS fallback

Poly from_coefficients(const std::vector<Poly>& c, Var v) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (const auto& t : c[i].terms()) out.push_back(Term{t.mono * Monomial::of(v, static_cast<int>(i)), t.coeff});
  }
  return Poly::from_terms(std::move(out));
}

void trim(std::vector<Poly>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly list_gcd(const std::vector<Poly>& c) {
  Poly g;
  for (const auto& x : c) {
    if (x.is_zero()) continue;
    g = g.is_zero() ? (x.sign() < 0 ? -x : x) : gcd(g, x);
    if (g.is_one()) break;
  }
  return g;
}

std::vector<Poly> divide_all(const std::vector<Poly>& c, const Poly& d) {
  std::vector<Poly> out;
  out.reserve(c.size());
  for (const auto& x : c) {
    auto q = x.divide_exact(d);
    if (!q) throw Error("internal: content division failed");
    out.push_back(std::move(*q));
  }
  return out;
}

std::vector<Poly> pseudo_remainder(std::vector<Poly> a, const std::vector<Poly>& b) {
  const std::size_t n = b.size() - 1;
  const Poly& lc = b.back();
  int steps = static_cast<int>(a.size()) - static_cast<int>(n);
  while (a.size() > n && !a.empty()) {
    Poly lead = a.back();
    std::size_t off = a.size() - 1 - n;
    for (auto& x : a) x *= lc;
    for (std::size_t i = 0; i <= n; ++i) a[off + i] -= lead * b[i];
    trim(a);
    --steps;
  }
  if (steps > 0) {
    Poly f = lc.pow(steps);
    for (auto& x : a) x *= f;
  }
  return a;
}

}  // namespace

namespace detail {

bool modular_coprime(const Poly& a, const Poly& b) {
  VarMask common = a.vars() & b.vars();
  if (common == 0) return true;
  thread_local std::mt19937_64 rng(0x5eed'1234'abcdull);
  std::uniform_int_distribution<std::uint64_t> dist(2, kPrime - 1);
  for (Var v : kAllVars) {
    if (!(common & bit(v))) continue;
    bool absent = false;
    for (int attempt = 0; attempt < 3 && !absent; ++attempt) {
      std::array<std::uint64_t, kNumVars> point{};
      for (auto& x : point) x = dist(rng);
      UPolyMod fa = image(a, v, point);
      UPolyMod fb = image(b, v, point);
      if (static_cast<int>(fa.size()) - 1 != a.degree(v) || static_cast<int>(fb.size()) - 1 != b.degree(v)) {
        continue;
      }
      if (gcd_degree(fa, fb) > 0) return false;
      absent = true;
    }
    if (!absent) return false;
  }
  return true;
}

std::optional<GcdResult> heuristic_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  return heu(a, b);
}

Poly prs_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.sign() < 0 ? -b : b;
  if (b.is_zero()) return a.sign() < 0 ? -a : a;
  VarMask common = a.vars() & b.vars();
  if (common == 0) {
    mpz_class g;
    mpz_class ca = a.content();
    mpz_class cb = b.content();
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    Poly ga(g);
    // gcd(a, b) divides content of a in the variables absent from b and vice versa.
    return ga;
  }
  Var v = first_var(common);
  auto ac = a.coefficients(v);
  auto bc = b.coefficients(v);
  Poly conta = list_gcd(ac);
  Poly contb = list_gcd(bc);
  Poly cont = gcd(conta, contb);
  std::vector<Poly> pa = divide_all(ac, conta);
  std::vector<Poly> pb = divide_all(bc, contb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (true) {
    if (pb.size() == 1) {
      pb = {Poly(1)};
      break;
    }
    auto r = pseudo_remainder(pa, pb);
    if (r.empty()) break;
    if (r.size() == 1) {
      pb = {Poly(1)};
      break;
    }
    Poly rc = list_gcd(r);
    pa = std::move(pb);
    pb = divide_all(r, rc);
  }
  Poly pc = list_gcd(pb);
  Poly g = from_coefficients(divide_all(pb, pc), v) * cont;
  return g.sign() < 0 ? -g : g;
}

}  // namespace detail

GcdResult gcd_cofactors(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error("gcd(0, 0) is undefined");
  if (a.is_zero()) {
    int s = b.sign();
    return GcdResult{s < 0 ? -b : b, Poly{}, Poly(s < 0 ? -1 : 1)};
  }
  if (b.is_zero()) {
    int s = a.sign();
    return GcdResult{s < 0 ? -a : a, Poly(s < 0 ? -1 : 1), Poly{}};
  }
  if (a == b) {
    int s = a.sign();
    return GcdResult{s < 0 ? -a : a, Poly(s), Poly(s)};
  }

  Monomial ma = a.monomial_content();
  Monomial mb = b.monomial_content();
  Monomial mg = Monomial::gcd(ma, mb);
  Poly a1 = a.divexact(ma);
  Poly b1 = b.divexact(mb);
  mpz_class ca = a1.content();
  mpz_class cb = b1.content();
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Poly a2 = a1.divexact(ca);
  Poly b2 = b1.divexact(cb);

  Poly h(1);
  Poly qa = a2;
  Poly qb = b2;
  if (!a2.is_constant() && !b2.is_constant()) {
    if (a2 == b2 || a2 == -b2) {
      h = a2.sign() < 0 ? -a2 : a2;
      qa = Poly(a2.sign());
      qb = Poly(a2 == b2 ? a2.sign() : -a2.sign());
    } else if (!detail::modular_coprime(a2, b2)) {
      if (auto r = detail::heuristic_gcd(a2, b2)) {
        h = std::move(r->gcd);
        qa = std::move(r->cof_a);
        qb = std::move(r->cof_b);
      } else {
        h = detail::prs_gcd(a2, b2);
        qa = *a2.divide_exact(h);
        qb = *b2.divide_exact(h);
      }
    }
  }
  Poly g = h.mul_term(mg, cg);
  Poly cofa = qa.mul_term(ma / mg, mpz_class(ca / cg));
  Poly cofb = qb.mul_term(mb / mg, mpz_class(cb / cg));
  return GcdResult{std::move(g), std::move(cofa), std::move(cofb)};
}

Poly gcd(const Poly& a, const Poly& b) { return gcd_cofactors(a, b).gcd; }

}  // namespace reflectq::alg
