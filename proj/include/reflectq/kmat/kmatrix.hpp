#pragma once

#include "reflectq/qboson/boson.hpp"
#include "reflectq/reps/operator_table.hpp"

namespace reflectq::kmat {

using alg::RatFunc;
using qboson::BosonElement;
using reps::OperatorTable;
using weights::Composition;

/// Matrix product operator G^j_i in the q-boson algebra.
BosonElement g_op(int i, int j);

/// (q^{-l} z^{-1}; q)_{l+1} / ((q^2;q^2)_l (-q z^{-1}; q)_l), the scalar in front of the trace.
RatFunc trace_prefactor(int l);

/// K(z)^g_a in (q, z) from the trace formula; zero unless |a| = |g|.
RatFunc k_elem(const Composition& a, const Composition& g);

/// Same element through the regrouped hatted operators k^{-i} G^j_i traced
/// against z^{-h}, with the half-integer q powers paired into q^{<a,a>}.
RatFunc k_elem_hatted(const Composition& a, const Composition& g);

/// K(z) as a map V_{l,z} -> V*_{l,1/z}: column a holds K^g_a at output g.
OperatorTable k_table(int n, int l);

enum class KClosedForm { n2, extremal, special_qml, special_1 };

/// Closed-form evaluations:
///   n2          rank-2 double sum (any a, g of equal weight, n = 2)
///   extremal    a = l e_i, g = l e_j
///   special_qml value at z = q^{-l}
///   special_1   value at z = 1
RatFunc k_closed(KClosedForm form, const Composition& a, const Composition& g);

/// K'(z)^g_a in (p, z): p^{a - g} (q^2;q^2)_l / prod (q^2;q^2)_{g_i} K(p^n z)^g_a with q = -p^2.
RatFunc kprime_elem(const Composition& a, const Composition& g);

/// K'(z) as a map V_{l,z} -> Vvee_{l,1/z}, entries over p.
OperatorTable kprime_table(int n, int l);

}  // namespace reflectq::kmat

namespace reflectq::kmat {

/// One unknown K^g_a with its coefficient in a linear relation.
struct KTerm {
  RatFunc coeff;
  Composition a;
  Composition g;
};

/// The intertwining relation for index i (mod n) at the entry (a, g), written
/// as sum coeff K^g'_a' = 0. Terms leaving Z_+^n are dropped (their
/// coefficients vanish).
std::vector<KTerm> intertwining_relation(int i, const Composition& a, const Composition& g);

}  // namespace reflectq::kmat
