#include "reflectq/exactalg/factored.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>

namespace reflectq::alg {

namespace {

// Coefficients of the d-th cyclotomic polynomial, constant term first:
// x^d - 1 divided by Phi_e for every proper divisor e.
std::vector<long> compute_cyclotomic(int d) {
  std::vector<long> r(static_cast<std::size_t>(d) + 1, 0);
  r[0] = -1;
  r.back() = 1;
  for (int e = 1; e < d; ++e) {
    if (d % e) continue;
    const std::vector<long> div = compute_cyclotomic(e);  // monic
    const std::size_t dd = div.size() - 1;
    std::vector<long> quot(r.size() - dd, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
      quot[k] = r[k + dd];
      for (std::size_t t = 0; t <= dd; ++t) r[k + t] -= quot[k] * div[t];
    }
    r = std::move(quot);
  }
  return r;
}

const std::vector<long>& cyclotomic(int d) {
  static std::mutex mu;
  static std::map<int, std::vector<long>> memo;
  std::lock_guard lock(mu);
  auto it = memo.find(d);
  if (it == memo.end()) it = memo.emplace(d, compute_cyclotomic(d)).first;
  return it->second;
}

// Phi_d(y) for a monomial y.
Poly cyclotomic_in(int d, const Exponents& y) {
  std::vector<Term> terms;
  const auto& c = cyclotomic(d);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Exponents e{};
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = static_cast<int>(i) * y[v];
    terms.push_back(Term{Monomial::from_exponents(e), mpz_class(c[i])});
  }
  return Poly::from_terms(std::move(terms));
}

// Irreducible factors of m - 1 (plus = false) or m + 1 (plus = true): with
// m = y^g for a primitive monomial y, these are Phi_d(y) over d | g, resp.
// d | 2g with d not dividing g.
std::vector<Poly> compute_binomial_factors(const Exponents& m, bool plus) {
  int g = 0;
  for (int e : m) g = std::gcd(g, e);
  Exponents y{};
  for (std::size_t v = 0; v < m.size(); ++v) y[v] = m[v] / g;
  std::vector<Poly> out;
  for (int d = 1; d <= 2 * g; ++d) {
    bool take = plus ? ((2 * g) % d == 0 && g % d != 0) : (g % d == 0);
    if (take) out.push_back(cyclotomic_in(d, y));
  }
  return out;
}

const std::vector<Poly>& binomial_factors(const Exponents& m, bool plus) {
  thread_local std::map<std::pair<Exponents, bool>, std::vector<Poly>> memo;
  auto key = std::make_pair(m, plus);
  auto it = memo.find(key);
  if (it == memo.end()) it = memo.emplace(key, compute_binomial_factors(m, plus)).first;
  return it->second;
}

// Necessary condition for atom | num: both mapped mod a prime to polynomials
// in one variable of the atom, the other variables set to fixed residues.
// A false result is conclusive.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e > 0; e >>= 1, b = mulmod(b, b)) {
    if (e & 1) r = mulmod(r, b);
  }
  return r;
}

const std::array<std::uint64_t, kNumVars>& residues() {
  static const auto pts = [] {
    std::array<std::uint64_t, kNumVars> p{};
    std::uint64_t x = 0x9E3779B97F4A7C15ULL;
    for (auto& v : p) {
      x ^= x << 13;
      x ^= x >> 7;
      x ^= x << 17;
      v = x % kPrime;
    }
    return p;
  }();
  return pts;
}

// dense image in F_p[v], constant term first
std::vector<std::uint64_t> image(const Poly& f, std::size_t v) {
  static const mpz_class modulus(std::to_string(kPrime));
  const auto& pts = residues();
  std::vector<std::uint64_t> out;
  mpz_class r;
  for (const auto& t : f.terms()) {
    const Exponents e = t.mono.exponents();
    mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_mpz_t(), modulus.get_mpz_t());
    std::uint64_t c = r.get_ui();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != v && e[i] != 0) c = mulmod(c, powmod(pts[i], static_cast<std::uint64_t>(e[i])));
    }
    const auto k = static_cast<std::size_t>(e[v]);
    if (out.size() <= k) out.resize(k + 1, 0);
    out[k] = (out[k] + c) % kPrime;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

bool image_divides(std::vector<std::uint64_t> f, const std::vector<std::uint64_t>& d) {
  if (d.size() <= 1) return true;  // inconclusive
  if (f.size() < d.size()) return f.empty();
  const std::uint64_t inv = powmod(d.back(), kPrime - 2);
  for (std::size_t top = f.size(); top-- >= d.size();) {
    const std::uint64_t c = mulmod(f[top], inv);
    if (c == 0) continue;
    const std::size_t off = top + 1 - d.size();
    for (std::size_t j = 0; j < d.size(); ++j) f[off + j] = (f[off + j] + kPrime - mulmod(c, d[j])) % kPrime;
  }
  for (std::size_t j = 0; j + 1 < d.size(); ++j) {
    if (f[j] != 0) return false;
  }
  return true;
}

std::size_t main_var(const Poly& atom) {
  const Exponents e = atom.terms().front().mono.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) return i;
  }
  return 0;
}

struct Part {
  Poly num;
  std::vector<int> rest;  // remaining power of each atom
};

// sum of num * prod atoms[k]^rest[k], taking the atom shared by the most
// parts out first
Poly expand(std::vector<Part> parts, const std::vector<Poly>& atoms) {
  if (parts.empty()) return Poly();
  {
    std::map<std::vector<int>, Poly> merged;
    for (auto& p : parts) {
      auto [it, fresh] = merged.emplace(p.rest, p.num);
      if (!fresh) it->second += p.num;
    }
    parts.clear();
    for (auto& [rest, num] : merged) {
      if (!num.is_zero()) parts.push_back(Part{std::move(num), rest});
    }
  }
  if (parts.empty()) return Poly();
  std::size_t best = 0, best_count = 0;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    std::size_t c = 0;
    for (const auto& p : parts) c += p.rest[k] > 0;
    if (c > best_count) {
      best = k;
      best_count = c;
    }
  }
  if (best_count == 0 || (best_count == 1 && parts.size() > 1) || parts.size() == 1) {
    Poly total;
    for (auto& p : parts) {
      Poly t = std::move(p.num);
      for (std::size_t k = 0; k < atoms.size(); ++k) {
        if (p.rest[k] > 0) t *= atoms[k].pow(p.rest[k]);
      }
      total += t;
    }
    return total;
  }
  std::vector<Part> with, without;
  for (auto& p : parts) {
    if (p.rest[best] > 0) {
      --p.rest[best];
      with.push_back(std::move(p));
    } else {
      without.push_back(std::move(p));
    }
  }
  Poly r = expand(std::move(with), atoms) * atoms[best];
  if (!without.empty()) r += expand(std::move(without), atoms);
  return r;
}

}  // namespace

FactoredFrac FactoredFrac::laurent(const mpz_class& c, const Exponents& e) {
  FactoredFrac f;
  if (c == 0) return f;
  f.num_ = Poly(c);
  f.shift_ = e;
  return f;
}

void FactoredFrac::mul_var(Var v, int e) {
  if (!is_zero()) shift_[static_cast<std::size_t>(index_of(v))] += e;
}

void FactoredFrac::mul_factor(const Poly& p, int power) {
  if (p.is_zero()) {
    if (power < 0) throw Error("division by zero in factored fraction");
    if (power > 0) *this = FactoredFrac();
    return;
  }
  if (power == 0 || is_zero()) return;
  Monomial mc = p.monomial_content();
  Exponents me = mc.exponents();
  for (std::size_t i = 0; i < me.size(); ++i) shift_[i] += power * me[i];
  Poly atom = p.divexact(mc);
  mpz_class c = atom.content();
  if (atom.sign() < 0) c = -c;
  atom = atom.divexact(c);
  mpz_class cp;
  mpz_pow_ui(cp.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(std::abs(power)));
  if (power > 0) {
    num_ = num_.scaled(cp);
  } else {
    if (cp < 0) {
      cp = -cp;
      num_ = -num_;
    }
    den_int_ *= cp;
  }
  if (atom.is_one()) return;
  // atom = m +- 1 splits into cyclotomic factors
  if (atom.size() == 2 && atom.terms()[1].mono.is_one() && abs(atom.terms()[1].coeff) == 1 &&
      atom.terms()[0].coeff == 1) {
    for (const auto& f : binomial_factors(atom.terms()[0].mono.exponents(), atom.terms()[1].coeff > 0)) {
      add_atom(f, power);
    }
    return;
  }
  if (power > 0) {
    num_ *= atom.pow(power);
    return;
  }
  add_atom(atom, power);
}

int FactoredFrac::exponent_of(const Poly& atom) const {
  for (const auto& [a, e] : atoms_) {
    if (a == atom) return e;
  }
  return 0;
}

void FactoredFrac::add_atom(const Poly& atom, int e) {
  for (auto it = atoms_.begin(); it != atoms_.end(); ++it) {
    if (it->first == atom) {
      it->second += e;
      if (it->second == 0) atoms_.erase(it);
      return;
    }
  }
  atoms_.emplace_back(atom, e);
}

FactoredFrac FactoredFrac::operator-() const {
  FactoredFrac r = *this;
  r.num_ = -r.num_;
  return r;
}

FactoredFrac operator*(const FactoredFrac& a, const FactoredFrac& b) {
  if (a.is_zero() || b.is_zero()) return FactoredFrac();
  FactoredFrac r = a;
  r.num_ *= b.num_;
  for (std::size_t i = 0; i < r.shift_.size(); ++i) r.shift_[i] += b.shift_[i];
  r.den_int_ *= b.den_int_;
  if (r.den_int_ != 1) {
    mpz_class g = gcd(r.num_.content(), r.den_int_);
    if (g != 1) {
      r.num_ = r.num_.divexact(g);
      r.den_int_ /= g;
    }
  }
  for (const auto& [atom, e] : b.atoms_) r.add_atom(atom, e);
  return r;
}

FactoredFrac FactoredFrac::sum(const std::vector<FactoredFrac>& terms) {
  std::vector<const FactoredFrac*> live;
  for (const auto& t : terms) {
    if (!t.is_zero()) live.push_back(&t);
  }
  if (live.empty()) return FactoredFrac();
  if (live.size() == 1) return *live.front();
  FactoredFrac r;
  r.shift_ = live.front()->shift_;
  r.den_int_ = live.front()->den_int_;
  std::vector<Poly> atoms;
  for (const auto* t : live) {
    for (std::size_t i = 0; i < r.shift_.size(); ++i) r.shift_[i] = std::min(r.shift_[i], t->shift_[i]);
    mpz_lcm(r.den_int_.get_mpz_t(), r.den_int_.get_mpz_t(), t->den_int_.get_mpz_t());
    for (const auto& [atom, e] : t->atoms_) {
      if (std::find(atoms.begin(), atoms.end(), atom) == atoms.end()) atoms.push_back(atom);
    }
  }
  // common power of each atom: the least over all terms
  std::vector<std::vector<int>> exps(live.size(), std::vector<int>(atoms.size(), 0));
  std::vector<int> common(atoms.size(), 0);
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      exps[i][k] = live[i]->exponent_of(atoms[k]);
      common[k] = i == 0 ? exps[i][k] : std::min(common[k], exps[i][k]);
    }
  }
  std::vector<Part> parts;
  for (std::size_t i = 0; i < live.size(); ++i) {
    const FactoredFrac& t = *live[i];
    Exponents e{};
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = t.shift_[v] - r.shift_[v];
    std::vector<int> rest(atoms.size());
    for (std::size_t k = 0; k < atoms.size(); ++k) rest[k] = exps[i][k] - common[k];
    parts.push_back(Part{t.num_.mul_term(Monomial::from_exponents(e), r.den_int_ / t.den_int_), std::move(rest)});
  }
  r.num_ = expand(std::move(parts), atoms);
  if (r.num_.is_zero()) return FactoredFrac();
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (common[k] != 0) r.atoms_.emplace_back(std::move(atoms[k]), common[k]);
  }
  r.cancel();
  return r;
}

void FactoredFrac::cancel() {
  if (is_zero()) {
    *this = FactoredFrac();
    return;
  }
  Monomial mc = num_.monomial_content();
  if (!mc.is_one()) {
    Exponents me = mc.exponents();
    for (std::size_t i = 0; i < me.size(); ++i) shift_[i] += me[i];
    num_ = num_.divexact(mc);
  }
  mpz_class g = gcd(num_.content(), den_int_);
  if (g != 1) {
    num_ = num_.divexact(g);
    den_int_ /= g;
  }
  std::map<std::size_t, std::vector<std::uint64_t>> images;
  for (auto& [atom, e] : atoms_) {
    while (e < 0) {
      const std::size_t v = main_var(atom);
      auto it = images.find(v);
      if (it == images.end()) it = images.emplace(v, image(num_, v)).first;
      if (!image_divides(it->second, image(atom, v))) break;
      images.clear();
      auto qt = num_.divide_exact(atom);
      if (!qt) break;
      num_ = std::move(*qt);
      ++e;
    }
  }
  std::erase_if(atoms_, [](const auto& x) { return x.second == 0; });
}

RatFunc FactoredFrac::to_ratfunc() const {
  if (is_zero()) return RatFunc();
  Poly num = num_;
  Poly den = Poly(den_int_);
  for (const auto& [atom, e] : atoms_) {
    if (e > 0) num *= atom.pow(e);
    else den *= atom.pow(-e);
  }
  return RatFunc::fraction(num, den) * RatFunc::laurent(1, shift_);
}

}  // namespace reflectq::alg
