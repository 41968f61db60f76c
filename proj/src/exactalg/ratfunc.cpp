#include "reflectq/exactalg/ratfunc.hpp"

#include "reflectq/exactalg/gcd.hpp"

namespace reflectq::alg {

mpq_class evaluate(const Poly& p, const Point& at) {
  if (p.is_zero()) return 0;
  VarMask vs = p.vars();
  std::array<std::vector<mpq_class>, kNumVars> powers;
  for (Var v : kAllVars) {
    if (!(vs & bit(v))) continue;
    auto& tab = powers[static_cast<std::size_t>(index_of(v))];
    int d = p.degree(v);
    tab.reserve(static_cast<std::size_t>(d) + 1);
    tab.emplace_back(1);
    for (int i = 1; i <= d; ++i) tab.push_back(tab.back() * at[static_cast<std::size_t>(index_of(v))]);
  }
  // Accumulate over a common denominator to avoid canonicalizing every partial sum.
  mpz_class num = 0;
  mpz_class den = 1;
  mpq_class term;
  for (const auto& t : p.terms()) {
    term = t.coeff;
    for (Var v : kAllVars) {
      int e = t.mono.exponent(v);
      if (e) term *= powers[static_cast<std::size_t>(index_of(v))][static_cast<std::size_t>(e)];
    }
    if (term.get_den() == den) {
      num += term.get_num();
    } else {
      num = num * term.get_den() + term.get_num() * den;
      den *= term.get_den();
    }
  }
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

RatFunc::RatFunc(const mpq_class& c) : num_(c.get_num()), den_(c.get_den()) {}

RatFunc RatFunc::normalized_sign(Poly num, Poly den) {
  if (den.sign() < 0) return RatFunc(-num, -den, 0);
  return RatFunc(std::move(num), std::move(den), 0);
}

RatFunc RatFunc::fraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error("rational function with zero denominator");
  if (num.is_zero()) return RatFunc();
  if (den.is_one()) return RatFunc(num);
  auto r = gcd_cofactors(num, den);
  return normalized_sign(std::move(r.cof_a), std::move(r.cof_b));
}

RatFunc RatFunc::var(Var v, int e) {
  if (e >= 0) return RatFunc(Poly::var(v, e));
  return RatFunc(Poly(1), Poly::var(v, -e), 0);
}

RatFunc RatFunc::laurent(const mpz_class& c, const Exponents& e) {
  if (c == 0) return RatFunc();
  Exponents pos{};
  Exponents neg{};
  for (int i = 0; i < kNumVars; ++i) {
    pos[static_cast<std::size_t>(i)] = std::max(e[static_cast<std::size_t>(i)], 0);
    neg[static_cast<std::size_t>(i)] = std::max(-e[static_cast<std::size_t>(i)], 0);
  }
  return RatFunc(Poly::monomial(c, Monomial::from_exponents(pos)), Poly::monomial(1, Monomial::from_exponents(neg)),
                 0);
}

mpq_class RatFunc::constant_value() const {
  if (!is_constant()) throw Error("rational function is not constant");
  mpq_class r(num_.constant_value(), den_.constant_value());
  r.canonicalize();
  return r;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, 0); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    Poly n = a.num_ + b.num_;
    if (n.is_zero()) return RatFunc();
    if (a.den_.is_one()) return RatFunc(std::move(n));
    auto r = gcd_cofactors(n, a.den_);
    return RatFunc::normalized_sign(std::move(r.cof_a), std::move(r.cof_b));
  }
  if (a.den_.is_one()) return RatFunc(a.num_ * b.den_ + b.num_, b.den_, 0);
  if (b.den_.is_one()) return RatFunc(a.num_ + b.num_ * a.den_, a.den_, 0);
  auto g = gcd_cofactors(a.den_, b.den_);
  Poly n = a.num_ * g.cof_b + b.num_ * g.cof_a;
  if (n.is_zero()) return RatFunc();
  if (g.gcd.is_one()) return RatFunc(std::move(n), a.den_ * b.den_, 0);
  auto h = gcd_cofactors(n, g.gcd);
  // den = (a.den / g) * (b.den / g) * (g / h)
  return RatFunc::normalized_sign(std::move(h.cof_a), g.cof_a * g.cof_b * h.cof_b);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
  if (b.den_.is_one()) {
    auto g = gcd_cofactors(b.num_, a.den_);
    return RatFunc::normalized_sign(a.num_ * g.cof_a, std::move(g.cof_b));
  }
  if (a.den_.is_one()) {
    auto g = gcd_cofactors(a.num_, b.den_);
    return RatFunc::normalized_sign(g.cof_a * b.num_, std::move(g.cof_b));
  }
  auto g1 = gcd_cofactors(a.num_, b.den_);
  auto g2 = gcd_cofactors(b.num_, a.den_);
  return RatFunc::normalized_sign(g1.cof_a * g2.cof_a, g2.cof_b * g1.cof_b);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error("division by zero rational function");
  return normalized_sign(den_, num_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc& RatFunc::operator+=(const RatFunc& o) { return *this = *this + o; }
RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this = *this - o; }
RatFunc& RatFunc::operator*=(const RatFunc& o) { return *this = *this * o; }
RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this = *this / o; }

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  // powers of coprime polynomials stay coprime
  return RatFunc(num_.pow(e), den_.pow(e), 0);
}

mpq_class RatFunc::evaluate(const Point& at) const {
  mpq_class d = alg::evaluate(den_, at);
  if (d == 0) throw Error("denominator vanishes at evaluation point");
  return alg::evaluate(num_, at) / d;
}

std::size_t RatFunc::hash() const { return num_.hash() * 31 + den_.hash(); }

std::string RatFunc::to_string() const { return "num: " + num_.to_string() + "; den: " + den_.to_string(); }

namespace {

struct BoundValue {
  Var v;
  int degree;  // max degree of v in the polynomial being substituted into
  std::vector<Poly> num_pow;
  std::vector<Poly> den_pow;
};

// Returns sum_t c_t prod_v N_v^{e_v} D_v^{deg_v - e_v}; the caller divides by prod D_v^{deg_v}.
Poly homogenized(const Poly& p, const std::vector<BoundValue>& bound) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Exponents e = t.mono.exponents();
    Poly term = Poly::monomial(t.coeff, Monomial{});
    Exponents rest = e;
    for (const auto& b : bound) {
      int k = e[static_cast<std::size_t>(index_of(b.v))];
      rest[static_cast<std::size_t>(index_of(b.v))] = 0;
      term *= b.num_pow[static_cast<std::size_t>(k)];
      term *= b.den_pow[static_cast<std::size_t>(b.degree - k)];
    }
    Monomial m = Monomial::from_exponents(rest);
    for (const auto& u : term.terms()) out.push_back(Term{u.mono * m, u.coeff});
  }
  return Poly::from_terms(std::move(out));
}

}  // namespace

RatFunc substitute(const RatFunc& f, const std::vector<Binding>& bindings) {
  VarMask vs = f.vars();
  std::vector<BoundValue> bound;
  for (const auto& [v, value] : bindings) {
    if (!(vs & bit(v))) continue;
    BoundValue b{v, std::max(f.num().degree(v), f.den().degree(v)), {}, {}};
    b.num_pow.push_back(Poly(1));
    b.den_pow.push_back(Poly(1));
    for (int i = 1; i <= b.degree; ++i) {
      b.num_pow.push_back(b.num_pow.back() * value.num());
      b.den_pow.push_back(b.den_pow.back() * value.den());
    }
    bound.push_back(std::move(b));
  }
  if (bound.empty()) return f;
  // Both num and den are homogenized to the same degrees, so the D factors cancel.
  Poly n = homogenized(f.num(), bound);
  Poly d = homogenized(f.den(), bound);
  if (d.is_zero()) throw Error("substitution makes the denominator vanish");
  return RatFunc::fraction(n, d);
}

LowestOrder lowest_order(const RatFunc& f, Var v) {
  if (f.is_zero()) throw Error("lowest order of zero is undefined");
  int on = f.num().min_degree(v);
  int od = f.den().min_degree(v);
  RatFunc lead = RatFunc::fraction(f.num().coefficient(v, on), f.den().coefficient(v, od));
  return LowestOrder{on - od, std::move(lead)};
}

}  // namespace reflectq::alg
