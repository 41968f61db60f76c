#include "reflectq/exactalg/series.hpp"

#include <algorithm>

namespace reflectq::alg {

namespace {

void check_same_var(const PowerSeries& a, const PowerSeries& b) {
  if (a.var() != b.var()) throw Error("power series in different variables");
}

std::vector<RatFunc> poly_coefficients(const Poly& p, Var v, int order) {
  std::vector<RatFunc> out(static_cast<std::size_t>(order) + 1);
  auto cs = p.coefficients(v);
  for (std::size_t k = 0; k < cs.size() && k < out.size(); ++k) out[k] = RatFunc(cs[k]);
  return out;
}

}  // namespace

PowerSeries::PowerSeries(Var v, int order) : var_(v) {
  if (order < 0) throw Error("negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries PowerSeries::expand(const RatFunc& f, Var v, int order) {
  PowerSeries s(v, order);
  auto n = poly_coefficients(f.num(), v, order);
  auto d = poly_coefficients(f.den(), v, order);
  if (d[0].is_zero()) throw Error("series expansion at a pole");
  RatFunc inv0 = d[0].inverse();
  for (int k = 0; k <= order; ++k) {
    RatFunc acc = n[static_cast<std::size_t>(k)];
    for (int j = 1; j <= k; ++j) {
      const auto& dj = d[static_cast<std::size_t>(j)];
      if (!dj.is_zero()) acc -= dj * s[k - j];
    }
    s[k] = acc * inv0;
  }
  return s;
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const RatFunc& c) { return c.is_zero(); });
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  check_same_var(a, b);
  PowerSeries r(a.var(), std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + b.scaled(RatFunc(-1)); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  check_same_var(a, b);
  PowerSeries r(a.var(), std::min(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= r.order(); ++j) {
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

PowerSeries PowerSeries::scaled(const RatFunc& c) const {
  PowerSeries r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

}  // namespace reflectq::alg
