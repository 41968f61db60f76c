#pragma once

#include <cstdint>
#include <string>

#include "reflectq/reps/operator_table.hpp"
#include "reflectq/rmat/rmatrix.hpp"
#include "reflectq/verify/report.hpp"

namespace reflectq::verify {

/// Entry-wise comparison of two operators with the same spaces.
VerifyReport compare_tables(const std::string& equation, const reps::OperatorTable& lhs,
                            const reps::OperatorTable& rhs);

/// Tensor factors of V_{l1} x V_{l2} x V_{l3}: which are dual (s) or vee (v).
enum class YbeSequence { VVV, sVV, ssV, sss, vVV, vvV, vvv };

std::string to_string(YbeSequence s);
YbeSequence ybe_sequence_from_string(const std::string& s);

/// (1 x A(x))(B(xy) x 1)(1 x C(y)) = (C(y) x 1)(1 x B(xy))(A(x) x 1) with the
/// R kinds A, B, C fixed by the sequence.
VerifyReport check_ybe(YbeSequence seq, int n, int l1, int l2, int l3);

enum class Gauge { star, vee };

/// K1(x) R*(1/(xy)) K1(y) R(x/y) = R**(x/y) K1(y) R*(1/(xy)) K1(x) on
/// V_l x V_m, or its vee form with K' and R-vee, R-vee-vee over p.
VerifyReport check_reflection(Gauge gauge, int n, int l, int m);

/// R Delta(g) = Delta^op(g) R for e_i, f_i, k_i and every i.
VerifyReport check_intertwining_r(rmat::RKind kind, int n, int l, int m);
/// The explicit linear relations for K(z), every i, symbolic in (q, z).
VerifyReport check_intertwining_k(int n, int l);
/// K'(z) b'_i = b'_i K'(z) from V_{l,z} to Vvee_{l,1/z}, every i.
VerifyReport check_intertwining_kprime(int n, int l);

/// The quadratic relation between products G^{g1}_{a1} G^{g2}_{a2} for all
/// indices in [0, bound].
VerifyReport check_local_relation(int bound);

/// The five-term identity of products of 2phi1 series, expanded in w to the
/// given order at random rational (q, u1, u2, v1, v2).
VerifyReport check_series_identity(int order, int samples, std::uint64_t seed);

/// Linear-solve oracle against the trace formula at random rational points
/// with numerators and denominators below 100.
VerifyReport check_oracle(int n, int l, int samples, std::uint64_t seed);

}  // namespace reflectq::verify
