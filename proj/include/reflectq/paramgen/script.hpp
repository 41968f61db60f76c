#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "reflectq/exactalg/factored.hpp"
#include "reflectq/rmat/rmatrix.hpp"
#include "reflectq/verify/report.hpp"

namespace reflectq::paramgen {

using alg::RatFunc;
using weights::Composition;

/// Matrices on the infinite space spanned by u_a, a in Z_+^k, with generic
/// parameters lam, mu (and nu for Yang-Baxter) independent of q.
enum class ScriptKind { K, R, Rstar, Rstarstar };

std::string to_string(ScriptKind k);

/// K(lam)^g_a = q^{<g,a> + |a|(|a|-1)/2 + |g|(|g|-1)/2} prod (-q;q)_{a_i+g_i} / (-lam^2;q)_{|a+g|}.
RatFunc script_k(const RatFunc& lam, const Composition& a, const Composition& g);

/// Q(lam, mu)^{g,d}_{a,b} for Q = R, Rstar, Rstarstar; the operator sends
/// u_a x u_b to sum Q^{g,d}_{a,b} u_d x u_g.
RatFunc script_r(ScriptKind kind, const RatFunc& lam, const RatFunc& mu, const Composition& g, const Composition& d,
                 const Composition& a, const Composition& b);

/// The same elements with factored denominators, as used by the equation
/// checks. Parameters are given by index: 0 = lam, 1 = mu, 2 = nu. For K only
/// lam, a and g are read.
alg::FactoredFrac script_elem_factored(ScriptKind kind, int lam, int mu, const Composition& g, const Composition& d,
                                      const Composition& a, const Composition& b);

/// Whether the element can be non-zero: the conservation law of the kind and
/// the support of its weight function. K has full support.
bool script_support(ScriptKind kind, const Composition& g, const Composition& d, const Composition& a,
                    const Composition& b);

/// Gauge replacement of the script R matrices by a bilinear f1 and linear
/// f2, f3 (integer-valued), as a multiplicative factor per element:
///   R:  q^{f1(d,g) - f1(a,b)} (lam/mu)^{f2(g-a)}
///   R*: q^{f1(a,d) - f1(b,g)} lam^{f3(g-a)} mu^{f2(d-b)}
///   R**: q^{f1(b,a) - f1(g,d)} (lam/mu)^{f3(g-a)}
struct ScriptGauge {
  std::vector<std::vector<int>> f1;  // f1(a, b) = sum_ij f1[i][j] a_i b_j
  std::vector<int> f2;
  std::vector<int> f3;

  bool is_trivial() const;
  RatFunc factor(ScriptKind kind, const RatFunc& lam, const RatFunc& mu, const Composition& g, const Composition& d,
                 const Composition& a, const Composition& b) const;
};

enum class ParamEquation { ybe_RRR, ybe_sRR, ybe_ssR, ybe_sss, reflection };

std::string to_string(ParamEquation e);
ParamEquation param_equation_from_string(const std::string& s);

/// Number of tensor slots of the equation (3 for Yang-Baxter, 2 for reflection).
int slot_count(ParamEquation e);

using State = std::vector<Composition>;

/// Both sides applied to u_in, as coefficients on outputs whose entries are
/// all <= bound. Intermediate sums are finite for any prescribed output.
struct SidesResult {
  std::map<State, alg::FactoredFrac> lhs;
  std::map<State, alg::FactoredFrac> rhs;
};
SidesResult apply_sides(ParamEquation eq, const State& in, int bound, const ScriptGauge& gauge = {});

/// One prescribed transition in -> out.
verify::VerifyReport check_param_eq(ParamEquation eq, const State& in, const State& out,
                                    const ScriptGauge& gauge = {});

/// Every transition from `in` to a state with entries <= bound. Outputs are
/// processed in groups sharing the last slot, which bounds memory.
verify::VerifyReport check_param_input(ParamEquation eq, const State& in, int bound, const ScriptGauge& gauge = {});

/// Every transition between states of length-k vectors with entries <= bound.
verify::VerifyReport check_param_sector(ParamEquation eq, int k, int bound, const ScriptGauge& gauge = {});

/// A random gauge with non-zero f1, f2, f3 (entries in [-2, 2]).
ScriptGauge random_gauge(int k, std::uint64_t seed);

/// The Yang-Baxter instance under a gauge replacement, over all transitions
/// with entries <= bound.
verify::VerifyReport check_gauge_invariance(ParamEquation eq, int k, int bound, const ScriptGauge& gauge);

/// Ratios between the script matrices at lam = q^{-l}, mu = q^{-m} and the
/// factorized special values of the finite matrices on B_l x B_m (n = k + 1).
struct ProbeRow {
  std::string kind;
  std::string sector;  // e.g. "a+b=(1,1,0)" conservation class
  std::string index;
  RatFunc ratio;
};
struct ProbeReport {
  int k = 0, l = 0, m = 0;
  std::vector<ProbeRow> rows;
  /// kind -> whether every sector shows a single ratio
  std::map<std::string, bool> constant_per_sector;
};
ProbeReport specialization_probe(int k, int l, int m);

}  // namespace reflectq::paramgen
