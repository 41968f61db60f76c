#pragma once

#include <functional>

#include "reflectq/reps/operator_table.hpp"

namespace reflectq::rmat {

using alg::RatFunc;
using reps::OperatorTable;
using weights::Composition;

enum class RKind { plain, star, starstar, vee, veevee };

std::string to_string(RKind k);
RKind rkind_from_string(const std::string& s);

/// Barred weight function: theta(g <= b) (lam;base)_{|g|} (mu/lam;base)_{|b|-|g|} / (mu;base)_{|b|}
/// prod_i binom(b_i, g_i)_base.
RatFunc phibar(const Composition& g, const Composition& b, const RatFunc& lam, const RatFunc& mu,
               const RatFunc& base);

/// Weight function: base^{<b-g, g>} (mu/lam)^{|g|} phibar.
RatFunc phi(const Composition& g, const Composition& b, const RatFunc& lam, const RatFunc& mu, const RatFunc& base);

/// Kernel A(z)^{g,d}_{a,b} with a, g of weight l and b, d of weight m.
RatFunc a_elem(const Composition& g, const Composition& d, const Composition& a, const Composition& b,
               const RatFunc& z);

/// R(z)^{g,d}_{a,b} of the given kind (zero outside the conservation law).
RatFunc r_elem(RKind kind, const Composition& g, const Composition& d, const Composition& a, const Composition& b,
               const RatFunc& z);

/// Input and output spaces of an R matrix: V_l x V_m -> V_m x V_l with the
/// kind deciding which factors are dual or vee.
std::vector<reps::Space> r_in_spaces(RKind kind, int n, int l, int m);
std::vector<reps::Space> r_out_spaces(RKind kind, int n, int l, int m);

/// Output pairs (g, d) allowed by the conservation law for input (a, b).
std::vector<std::pair<Composition, Composition>> r_outputs(RKind kind, int n, int l, int m, const Composition& a,
                                                           const Composition& b);

/// Full table: column (a, b) holds R^{g,d}_{a,b} at output label (d, g).
OperatorTable r_table(RKind kind, int n, int l, int m, const RatFunc& z);

/// Factorized elements at the special points: plain at z = q^{m-l} (l >= m),
/// star at z = q^{m+l}, starstar at z = q^{l-m} (l <= m).
RatFunc r_special(RKind kind, const Composition& g, const Composition& d, const Composition& a, const Composition& b);

/// The spectral value at which r_special applies.
RatFunc special_point(RKind kind, int l, int m);

using Bilinear = std::function<int(const Composition&, const Composition&)>;
using Linear = std::function<int(const Composition&)>;

/// Gauge replacement of a plain, star, or starstar table with parameters (lam, mu):
///   plain:    q^{f1(d,g) - f1(a,b)} (lam/mu)^{f2(g-a)}
///   star:     q^{f1(a,d) - f1(b,g)} lam^{f3(g-a)} mu^{f2(d-b)}
///   starstar: q^{f1(b,a) - f1(g,d)} (lam/mu)^{f3(g-a)}
OperatorTable gauge_transform(RKind kind, const OperatorTable& table, const RatFunc& lam, const RatFunc& mu,
                              const Bilinear& f1, const Linear& f2, const Linear& f3);

}  // namespace reflectq::rmat
