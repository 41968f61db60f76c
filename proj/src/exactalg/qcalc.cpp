#include "reflectq/exactalg/qcalc.hpp"

namespace reflectq::alg {

RatFunc qpow(int e) { return RatFunc::var(Var::q, e); }

RatFunc qnumber(int u) {
  if (u == 0) return RatFunc();
  if (u < 0) return -qnumber(-u);
  // q^{1-u} (1 + q^2 + ... + q^{2u-2})
  Poly n;
  for (int k = 0; k < u; ++k) n += Poly::var(Var::q, 2 * k);
  return RatFunc::fraction(n, Poly::var(Var::q, u - 1));
}

RatFunc qfactorial(int m) {
  if (m < 0) throw Error("negative order in q-factorial");
  RatFunc r(1);
  for (int k = 2; k <= m; ++k) r *= qnumber(k);
  return r;
}

RatFunc pochhammer(const RatFunc& x, const RatFunc& base, int m) {
  if (m < 0) throw Error("negative order in q-Pochhammer symbol");
  RatFunc r(1);
  RatFunc step = x;
  for (int k = 1; k <= m; ++k) {
    r *= RatFunc(1) - step;
    if (k < m) step *= base;
  }
  return r;
}

RatFunc qbinomial(int l, int m, const RatFunc& base) {
  if (l < 0) throw Error("negative order in q-binomial");
  if (m < 0 || m > l) return RatFunc();
  // Pascal recursion keeps everything polynomial when base is.
  std::vector<RatFunc> row{RatFunc(1)};
  for (int i = 1; i <= l; ++i) {
    std::vector<RatFunc> next(static_cast<std::size_t>(i) + 1);
    next[0] = RatFunc(1);
    next[static_cast<std::size_t>(i)] = RatFunc(1);
    RatFunc bk = base;
    for (int k = 1; k < i; ++k) {
      // binom(i, k) = binom(i-1, k-1) + base^k binom(i-1, k)
      next[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k) - 1] + bk * row[static_cast<std::size_t>(k)];
      bk *= base;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(m)];
}

}  // namespace reflectq::alg
