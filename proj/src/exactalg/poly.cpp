#include "reflectq/exactalg/poly.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace reflectq::alg {

namespace {
constexpr std::array<std::string_view, kNumVars> kNames = {"q", "p", "z", "x", "y", "lambda", "mu", "nu", "w"};
}

std::string_view var_name(Var v) { return kNames[static_cast<std::size_t>(index_of(v))]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (Var v : kAllVars) {
    if (var_name(v) == name) return v;
  }
  if (name == "λ") return Var::lam;
  if (name == "μ") return Var::mu;
  if (name == "ν") return Var::nu;
  return std::nullopt;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::from_exponents(const Exponents& e) {
  Packed bits = 0;
  int deg = 0;
  for (Var v : kAllVars) {
    int x = e[static_cast<std::size_t>(index_of(v))];
    if (x < 0 || x > kMaxExponent) throw Error("monomial exponent out of range");
    bits |= static_cast<Packed>(x) << shift(v);
    deg += x;
  }
  bits |= static_cast<Packed>(deg) << kDegreeShift;
  return Monomial(bits);
}

Monomial Monomial::of(Var v, int e) {
  Exponents ex{};
  ex[static_cast<std::size_t>(index_of(v))] = e;
  return from_exponents(ex);
}

Exponents Monomial::exponents() const {
  Exponents e{};
  for (Var v : kAllVars) e[static_cast<std::size_t>(index_of(v))] = exponent(v);
  return e;
}

VarMask Monomial::vars() const {
  VarMask m = 0;
  if (bits_ == 0) return m;
  for (Var v : kAllVars) {
    if (exponent(v) != 0) m |= bit(v);
  }
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree() > other.degree()) return false;
  for (Var v : kAllVars) {
    if (exponent(v) > other.exponent(v)) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (degree() + o.degree() <= kMaxExponent) return Monomial(bits_ + o.bits_);
  for (Var v : kAllVars) {
    if (exponent(v) + o.exponent(v) > kMaxExponent) throw Error("monomial exponent overflow");
  }
  return Monomial(bits_ + o.bits_);
}

Monomial Monomial::operator/(const Monomial& o) const { return Monomial(bits_ - o.bits_); }

Monomial Monomial::with_exponent(Var v, int e) const {
  Exponents ex = exponents();
  ex[static_cast<std::size_t>(index_of(v))] = e;
  return from_exponents(ex);
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Exponents e{};
  for (Var v : kAllVars) e[static_cast<std::size_t>(index_of(v))] = std::min(a.exponent(v), b.exponent(v));
  return from_exponents(e);
}

std::string Monomial::to_string() const {
  std::string s;
  for (Var v : kAllVars) {
    int e = exponent(v);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += var_name(v);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------- Poly

namespace {

bool term_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

// Merges two sorted term lists, with `sign` applied to the second.
std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].mono > b[j].mono) {
      out.push_back(a[i++]);
    } else if (b[j].mono > a[i].mono) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      mpz_class c = subtract ? mpz_class(a[i].coeff - b[j].coeff) : mpz_class(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back(Term{a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (subtract) out.back().coeff = -out.back().coeff;
  }
  return out;
}

}  // namespace

Poly::Poly(long c) {
  if (c != 0) terms_.push_back(Term{Monomial{}, mpz_class(c)});
}

Poly::Poly(const mpz_class& c) {
  if (c != 0) terms_.push_back(Term{Monomial{}, c});
}

Poly Poly::var(Var v, int e) { return monomial(1, Monomial::of(v, e)); }

Poly Poly::monomial(const mpz_class& c, const Monomial& m) {
  Poly p;
  if (c != 0) p.terms_.push_back(Term{m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

Poly Poly::from_sorted_unchecked(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

mpz_class Poly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!terms_[0].mono.is_one() || terms_.size() != 1) throw Error("polynomial is not constant");
  return terms_[0].coeff;
}

int Poly::degree(Var v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

int Poly::min_degree(Var v) const {
  if (terms_.empty()) return -1;
  int d = Monomial::kMaxExponent;
  for (const auto& t : terms_) d = std::min(d, t.mono.exponent(v));
  return d;
}

VarMask Poly::vars() const {
  VarMask m = 0;
  for (const auto& t : terms_) m |= t.mono.vars();
  return m;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge_add(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_add(terms_, o.terms_, true);
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  r += b;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  r -= b;
  return r;
}

Poly Poly::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::mul_term(const Monomial& m, const mpz_class& c) const {
  if (c == 0) return {};
  Poly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, t.coeff * c});
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Poly& small = a.size() <= b.size() ? a : b;
  const Poly& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) return large.mul_term(small.terms_[0].mono, small.terms_[0].coeff);
  // Overflow check once: the leading term has the maximal total degree.
  if (small.total_degree() + large.total_degree() > Monomial::kMaxExponent) {
    (void)(small.terms_[0].mono * large.terms_[0].mono);
  }

  // Johnson's heap multiplication: one cursor into `large` per term of `small`.
  struct Cursor {
    Monomial mono;
    std::uint32_t i;
    std::uint32_t j;
  };
  auto less = [](const Cursor& x, const Cursor& y) {
    if (x.mono != y.mono) return x.mono < y.mono;
    return x.i > y.i;
  };
  std::priority_queue<Cursor, std::vector<Cursor>, decltype(less)> heap(less);
  const auto& st = small.terms_;
  const auto& lt = large.terms_;
  heap.push(Cursor{st[0].mono * lt[0].mono, 0, 0});
  std::vector<Term> out;
  out.reserve(st.size() + lt.size());
  mpz_class acc;
  while (!heap.empty()) {
    Monomial cur = heap.top().mono;
    acc = 0;
    while (!heap.empty() && heap.top().mono == cur) {
      Cursor c = heap.top();
      heap.pop();
      mpz_addmul(acc.get_mpz_t(), st[c.i].coeff.get_mpz_t(), lt[c.j].coeff.get_mpz_t());
      if (c.j == 0 && c.i + 1 < st.size()) heap.push(Cursor{st[c.i + 1].mono * lt[0].mono, c.i + 1, 0});
      if (c.j + 1 < lt.size()) heap.push(Cursor{st[c.i].mono * lt[c.j + 1].mono, c.i, c.j + 1});
    }
    if (acc != 0) out.push_back(Term{cur, acc});
  }
  return Poly::from_sorted_unchecked(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::pow(int e) const {
  if (e < 0) throw Error("negative polynomial power");
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw Error("polynomial division by zero");
  if (is_zero()) return Poly{};
  if (d.is_monomial()) {
    const Term& dt = d.terms_[0];
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!dt.mono.divides(t.mono) || !mpz_divisible_p(t.coeff.get_mpz_t(), dt.coeff.get_mpz_t())) {
        return std::nullopt;
      }
      mpz_class c;
      mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), dt.coeff.get_mpz_t());
      r.terms_.push_back(Term{t.mono / dt.mono, std::move(c)});
    }
    return r;
  }
  if (d.total_degree() > total_degree()) return std::nullopt;
  if (!d.terms_.back().mono.divides(terms_.back().mono)) return std::nullopt;
  if (!d.leading().mono.divides(leading().mono)) return std::nullopt;
  for (Var v : kAllVars) {
    if (d.degree(v) > degree(v)) return std::nullopt;
  }

  // Heap division (Johnson): the remainder is f - sum_k qk * d, streamed in order.
  // Cursor (k, j) represents the product of quotient term k with divisor term j >= 1.
  struct Cursor {
    Monomial mono;
    std::uint32_t k;
    std::uint32_t j;
  };
  auto less = [](const Cursor& a, const Cursor& b) {
    if (a.mono != b.mono) return a.mono < b.mono;
    return a.k > b.k;
  };
  std::priority_queue<Cursor, std::vector<Cursor>, decltype(less)> heap(less);
  const auto& dt = d.terms_;
  const Term& dlead = dt[0];
  std::vector<Term> quot;
  std::size_t fi = 0;
  mpz_class acc;
  while (fi < terms_.size() || !heap.empty()) {
    Monomial cur;
    if (heap.empty() || (fi < terms_.size() && terms_[fi].mono >= heap.top().mono)) {
      cur = terms_[fi].mono;
    } else {
      cur = heap.top().mono;
    }
    acc = 0;
    if (fi < terms_.size() && terms_[fi].mono == cur) acc = terms_[fi++].coeff;
    while (!heap.empty() && heap.top().mono == cur) {
      Cursor c = heap.top();
      heap.pop();
      mpz_submul(acc.get_mpz_t(), quot[c.k].coeff.get_mpz_t(), dt[c.j].coeff.get_mpz_t());
      if (c.j + 1 < dt.size()) heap.push(Cursor{quot[c.k].mono * dt[c.j + 1].mono, c.k, c.j + 1});
    }
    if (acc == 0) continue;
    if (!dlead.mono.divides(cur) || !mpz_divisible_p(acc.get_mpz_t(), dlead.coeff.get_mpz_t())) {
      return std::nullopt;
    }
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), acc.get_mpz_t(), dlead.coeff.get_mpz_t());
    Monomial qm = cur / dlead.mono;
    quot.push_back(Term{qm, std::move(qc)});
    auto k = static_cast<std::uint32_t>(quot.size() - 1);
    if (dt.size() > 1) heap.push(Cursor{qm * dt[1].mono, k, 1});
  }
  return Poly::from_sorted_unchecked(std::move(quot));
}

Poly Poly::divexact(const mpz_class& c) const {
  if (c == 1) return *this;
  Poly r = *this;
  for (auto& t : r.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  return r;
}

Poly Poly::divexact(const Monomial& m) const {
  if (m.is_one()) return *this;
  Poly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono / m;
  return r;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_[0].mono;
  for (const auto& t : terms_) {
    if (g.is_one()) break;
    g = Monomial::gcd(g, t.mono);
  }
  return g;
}

mpz_class Poly::max_norm() const {
  mpz_class m = 0;
  for (const auto& t : terms_) {
    if (mpz_cmpabs(t.coeff.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(t.coeff);
  }
  return m;
}

Poly Poly::evaluate_at(Var v, const mpz_class& value) const {
  int deg = degree(v);
  if (deg <= 0) return *this;
  std::vector<mpz_class> powers(static_cast<std::size_t>(deg) + 1);
  powers[0] = 1;
  for (int i = 1; i <= deg; ++i) powers[static_cast<std::size_t>(i)] = powers[static_cast<std::size_t>(i) - 1] * value;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    int e = t.mono.exponent(v);
    out.push_back(Term{e == 0 ? t.mono : t.mono.with_exponent(v, 0), t.coeff * powers[static_cast<std::size_t>(e)]});
  }
  return from_terms(std::move(out));
}

Poly Poly::coefficient(Var v, int e) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.exponent(v) == e) out.push_back(Term{e == 0 ? t.mono : t.mono.with_exponent(v, 0), t.coeff});
  }
  // Removing a single variable's fixed exponent keeps relative order among these terms.
  return from_sorted_unchecked(std::move(out));
}

std::vector<Poly> Poly::coefficients(Var v) const {
  int deg = degree(v);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(deg, 0)) + 1);
  for (const auto& t : terms_) {
    int e = t.mono.exponent(v);
    buckets[static_cast<std::size_t>(e)].push_back(Term{e == 0 ? t.mono : t.mono.with_exponent(v, 0), t.coeff});
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_sorted_unchecked(std::move(b)));
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  // Display order: ascending total degree; within a degree, the stored order.
  std::vector<const Term*> order;
  order.reserve(terms_.size());
  std::size_t end = terms_.size();
  while (end > 0) {
    int deg = terms_[end - 1].mono.degree();
    std::size_t begin = end;
    while (begin > 0 && terms_[begin - 1].mono.degree() == deg) --begin;
    for (std::size_t k = begin; k < end; ++k) order.push_back(&terms_[k]);
    end = begin;
  }
  std::ostringstream os;
  bool first = true;
  for (const Term* t : order) {
    mpz_class a = abs(t->coeff);
    bool neg = t->coeff < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (t->mono.is_one()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << '*';
      os << t->mono.to_string();
    }
  }
  return os.str();
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

std::size_t Poly::hash() const {
  std::size_t h = terms_.size();
  MonomialHash mh;
  for (const auto& t : terms_) {
    h ^= mh(t.mono) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(mpz_get_si(t.coeff.get_mpz_t())) + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace reflectq::alg
