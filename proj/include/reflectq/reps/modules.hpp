#pragma once

#include "reflectq/reps/operator_table.hpp"
#include "reflectq/verify/report.hpp"

namespace reflectq::reps {

enum class Gen { e, f, k, kinv };

std::string to_string(Gen g);

/// Action of a Chevalley generator with index i (taken mod n, 0 aliases n) on
/// the module of the given kind with spectral parameter z.
OperatorTable act_generator(SpaceKind kind, int n, int l, Gen g, int i, const RatFunc& z);

/// Coproduct action on a tensor product, one spectral parameter per factor:
/// e -> sum 1..1 e k..k, f -> sum k^-1..k^-1 f 1..1, k^{+-1} -> k^{+-1} x ... x k^{+-1}.
OperatorTable tensor_act(const std::vector<Space>& factors, const std::vector<RatFunc>& spectral, Gen g, int i);

enum class Coideal { b, bprime };

/// b_i = -e_i + q^2 k_i f_i + q/(1-q) k_i over q, or
/// b'_i = e_i + q k_i f_i + p/(1-q) k_i over p with q = -p^2.
OperatorTable act_coideal(SpaceKind kind, int n, int l, Coideal variant, int i, const RatFunc& z);

/// Coideal element acting on a tensor product through the coproduct.
OperatorTable tensor_coideal(const std::vector<Space>& factors, const std::vector<RatFunc>& spectral, Coideal variant,
                             int i);

/// Rewrites a table over q as a table over p with q = -p^2.
OperatorTable to_p(const OperatorTable& t);

/// Diagonal map v*_a -> (-q)^{a} prod (q^2;q^2)_{a_i} v*_a realizing the dual
/// module at z as the vee module at (-q)^n z.
OperatorTable vee_star_iso(int n, int l);

/// Checks (pi*(g) v*_a, v_b) = (v*_a, pi(S(g)) v_b) for all a, b.
verify::VerifyReport dual_pairing_check(int n, int l, Gen g, int i);

}  // namespace reflectq::reps
