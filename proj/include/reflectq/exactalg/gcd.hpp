#pragma once

#include "reflectq/exactalg/poly.hpp"

namespace reflectq::alg {

struct GcdResult {
  Poly gcd;    // positive leading coefficient
  Poly cof_a;  // a / gcd
  Poly cof_b;  // b / gcd
};

/// Exact gcd over Z[q, p, ...] together with both cofactors.
///
/// Pipeline: monomial and integer content are split off; a modular image test
/// proves coprimality cheaply in the common case; otherwise the heuristic
/// evaluation/interpolation gcd runs, verified by exact multiplication, with a
/// recursive primitive PRS as the fallback.
GcdResult gcd_cofactors(const Poly& a, const Poly& b);

Poly gcd(const Poly& a, const Poly& b);

namespace detail {

/// True when the modular images prove gcd(a, b) is an integer constant.
/// A false return is inconclusive.
bool modular_coprime(const Poly& a, const Poly& b);

/// Heuristic gcd; nullopt when it gives up.
std::optional<GcdResult> heuristic_gcd(const Poly& a, const Poly& b);

/// Recursive primitive pseudo-remainder gcd (slow, unconditional).
Poly prs_gcd(const Poly& a, const Poly& b);

}  // namespace detail

}  // namespace reflectq::alg
