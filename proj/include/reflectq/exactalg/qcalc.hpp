#pragma once

#include "reflectq/exactalg/ratfunc.hpp"

namespace reflectq::alg {

/// [u] = (q^u - q^-u) / (q - q^-1) for any integer u.
RatFunc qnumber(int u);

/// [m]! = [1][2]...[m].
RatFunc qfactorial(int m);

/// (x; base)_m = prod_{k=1}^{m} (1 - x base^{k-1}).
RatFunc pochhammer(const RatFunc& x, const RatFunc& base, int m);

/// Gaussian binomial (base;base)_l / ((base;base)_m (base;base)_{l-m}); zero unless 0 <= m <= l.
RatFunc qbinomial(int l, int m, const RatFunc& base);

/// q^e as a rational function, e of either sign.
RatFunc qpow(int e);

}  // namespace reflectq::alg
