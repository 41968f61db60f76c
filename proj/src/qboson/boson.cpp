#include "reflectq/qboson/boson.hpp"

#include <mutex>
#include <sstream>

#include "reflectq/exactalg/qcalc.hpp"

namespace reflectq::qboson {

using alg::Poly;
using alg::Var;

namespace {

// Coefficients c_u of prod_{t=a}^{b} (1 - q^t k) = sum_u c_u k^u.
const std::vector<RatFunc>& k_product(int a, int b) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<RatFunc>> cache;
  std::lock_guard lock(mu);
  auto [it, fresh] = cache.try_emplace({a, b});
  if (fresh) {
    std::vector<RatFunc> c{RatFunc(1)};
    for (int t = a; t <= b; ++t) {
      std::vector<RatFunc> next(c.size() + 1);
      RatFunc qt = alg::qpow(t);
      for (std::size_t u = 0; u < c.size(); ++u) {
        next[u] += c[u];
        next[u + 1] -= c[u] * qt;
      }
      c = std::move(next);
    }
    it->second = std::move(c);
  }
  return it->second;
}

std::string power(const char* sym, int e) {
  if (e == 1) return sym;
  return std::string(sym) + "^" + std::to_string(e);
}

}  // namespace

BosonElement::BosonElement(const RatFunc& c) {
  if (!c.is_zero()) terms_.emplace(NormalWord{}, c);
}

BosonElement BosonElement::word(int plus, int k, int minus, const RatFunc& coeff) {
  if (plus < 0 || minus < 0) throw Error("negative a+/a- exponent");
  BosonElement x;
  x.add_term(NormalWord{plus, k, minus}, coeff);
  return x;
}

RatFunc BosonElement::coefficient(const NormalWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc() : it->second;
}

void BosonElement::add_term(const NormalWord& w, const RatFunc& c) {
  if (c.is_zero()) return;
  if (w.plus > 0 && w.minus > 0) {
    // (a+)^c k^m (a-)^c = q^{-mc} k^m prod_{s=0}^{c-1} (1 - q^{-s} k)
    const int cm = std::min(w.plus, w.minus);
    const auto& ps = k_product(1 - cm, 0);
    RatFunc pre = c * alg::qpow(-w.k * cm);
    for (std::size_t e = 0; e < ps.size(); ++e) {
      add_term(NormalWord{w.plus - cm, w.k + static_cast<int>(e), w.minus - cm}, pre * ps[e]);
    }
    return;
  }
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BosonElement& BosonElement::operator+=(const BosonElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

BosonElement& BosonElement::operator-=(const BosonElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

BosonElement BosonElement::scaled(const RatFunc& c) const {
  BosonElement r;
  if (c.is_zero()) return r;
  for (const auto& [w, x] : terms_) r.terms_.emplace(w, x * c);  // already canonical
  return r;
}

BosonElement operator*(const BosonElement& a, const BosonElement& b) {
  BosonElement r;
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      RatFunc c = cu * cv;
      // (a+)^i k^m (a-)^j (a+)^r k^s (a-)^t
      const int i = u.plus, m = u.k, j = u.minus, rr = v.plus, s = v.k, t = v.minus;
      if (j <= rr) {
        const int d = rr - j;
        const auto& ps = k_product(rr - j + 1, rr);
        RatFunc pre = c * alg::qpow(m * d);
        for (std::size_t e = 0; e < ps.size(); ++e) {
          r.add_term(NormalWord{i + d, m + s + static_cast<int>(e), t}, pre * ps[e]);
        }
      } else {
        const int d = j - rr;
        const auto& ps = k_product(d + 1, j);
        RatFunc pre = c * alg::qpow(s * d);
        for (std::size_t e = 0; e < ps.size(); ++e) {
          r.add_term(NormalWord{i, m + s + static_cast<int>(e), d + t}, pre * ps[e]);
        }
      }
    }
  }
  return r;
}

std::string BosonElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (w.plus) os << " (a+)^" << w.plus;
    if (w.k) os << " k^" << w.k;
    if (w.minus) os << " (a-)^" << w.minus;
  }
  return os.str();
}

BosonElement iota(const BosonElement& x) {
  // iota((a+)^i k^m (a-)^j) = (a+)^j k^m (a-)^i
  BosonElement r;
  for (const auto& [w, c] : x.terms()) r += BosonElement::word(w.minus, w.k, w.plus, c);
  return r;
}

std::optional<int> grade(const BosonElement& x) {
  std::optional<int> g;
  for (const auto& [w, c] : x.terms()) {
    int d = w.plus - w.minus;
    if (g && *g != d) return std::nullopt;
    g = d;
  }
  return g.value_or(0);
}

RatFunc trace(const BosonElement& x) {
  // Tr(w^h (a+)^i k^m (a-)^i) = w^i Tr(w^h k^m prod_{s=1}^{i} (1 - q^s k)), Tr(w^h k^r) = 1 / (1 - q^r w)
  std::map<std::pair<int, int>, RatFunc> by_power;  // (i, r) -> coefficient of w^i Tr(k^r)
  for (const auto& [w, c] : x.terms()) {
    if (w.plus != w.minus) continue;
    const auto& ps = k_product(1, w.plus);
    for (std::size_t e = 0; e < ps.size(); ++e) {
      auto& slot = by_power[{w.plus, w.k + static_cast<int>(e)}];
      slot += c * ps[e];
    }
  }
  const RatFunc wv = RatFunc::var(Var::w);
  std::map<int, RatFunc> by_r;
  for (const auto& [key, c] : by_power) {
    if (c.is_zero()) continue;
    by_r[key.second] += c * wv.pow(key.first);
  }
  RatFunc total;
  for (const auto& [r, c] : by_r) {
    if (c.is_zero()) continue;
    total += c / (RatFunc(1) - alg::qpow(r) * wv);
  }
  return total;
}

alg::PowerSeries fock_trace_series(const BosonElement& x, int order) {
  alg::PowerSeries s(Var::w, order);
  for (int n = 0; n <= order; ++n) {
    RatFunc diag;
    for (const auto& [w, c] : x.terms()) {
      if (w.plus != w.minus || w.minus > n) continue;
      // (a-)^i |n> = prod_{s=0}^{i-1} (1 - q^{n-s}) |n-i>, then k^m gives q^{m(n-i)}
      RatFunc v = c * alg::qpow(w.k * (n - w.minus));
      for (int t = 0; t < w.minus; ++t) v *= RatFunc(1) - alg::qpow(n - t);
      diag += v;
    }
    // <n|x|n> / (q;q)_n is the diagonal coefficient itself since <n|n> = (q;q)_n
    s[n] = diag;
  }
  return s;
}

}  // namespace reflectq::qboson
