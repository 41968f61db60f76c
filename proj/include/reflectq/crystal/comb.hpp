#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "reflectq/exactalg/ratfunc.hpp"
#include "reflectq/verify/report.hpp"
#include "reflectq/weights/composition.hpp"

namespace reflectq::crystal {

using alg::RatFunc;
using weights::Composition;

/// q -> 0 limits. R and R** of the vee family are expanded in p with q = -p^2;
/// the plain R in q.
enum class CombKind { R, Rvee, Rveevee, K };

std::string to_string(CombKind k);
CombKind comb_kind_from_string(const std::string& s);

/// One surviving transition. For R kinds `in` is (a, b) in tensor order and
/// `out` the output factors in tensor order; for K both hold one entry. The
/// limit of the (normalized) element is z^{-energy}.
struct CombPair {
  std::vector<Composition> in;
  std::vector<Composition> out;
  int energy = 0;
};

struct CombMap {
  CombKind kind = CombKind::R;
  int n = 0, l = 0, m = 0;
  std::vector<CombPair> pairs;
};

/// The exponent e with f = z^e, if f is a bare power of z.
std::optional<int> z_power(const RatFunc& f);

/// Lowest order in p of f(q = -p^2, z = p^w z) for f in q, z (other
/// variables ride along in the leading coefficient).
alg::LowestOrder p_order(const RatFunc& f, int z_weight = 0);

/// Rvee(z) at (l e_1, m e_2) -> (l e_1, m e_2), equal to
/// ((-q)^{1-n} z)^m ((-q)^n q^{l-m} z^{-1}; q^2)_m / ((-q)^{2-n} q^{l-m} z; q^2)_m.
RatFunc rvee_normalizer(int n, int l, int m);

/// The single output of input (a, b) (b ignored for K) whose limit survives.
/// R kinds: R is V_l x V_m -> V_m x V_l, Rvee is Vvee_l x V_m -> V_m x Vvee_l
/// (normalized by rvee_normalizer), Rveevee is Vvee_l x Vvee_m -> Vvee_m x Vvee_l.
/// K: the limit of K'^g_a / K'^{l e_1}_{l e_2} on B_l.
/// Throws if no output or more than one output survives, if a limit
/// diverges, or if a surviving limit is not a bare power of z.
CombPair limit_column(CombKind kind, int n, int l, int m, const Composition& a, const Composition& b = {});

/// limit_column over the whole domain.
CombMap limit_map(CombKind kind, int n, int l, int m);

/// The K limit checked against a -> sigma(a) with limit z^{a_1}; throws on
/// disagreement.
CombMap comb_k(int n, int l);

/// Every output occurs exactly once and the domain is covered.
bool is_bijection(const CombMap& map);

/// Energies against the closed forms: Q_0(b, a) for R, P_0(b, a) for Rvee,
/// Q_0(a, b) for Rveevee, -a_1 for K.
verify::VerifyReport check_energies(const CombMap& map);

/// Set-theoretical Yang-Baxter equation of the R or Rveevee maps on
/// B_l1 x B_l2 x B_l3.
verify::VerifyReport check_set_ybe(CombKind kind, int n, int l1, int l2, int l3);

/// Both sides of the reflection equation at q = 0, x = y = 1, as chains of
/// states from a x b in B_l x B_m.
struct SetReChains {
  std::vector<std::vector<Composition>> lhs;  // R, K'_1, Rvee, K'_1
  std::vector<std::vector<Composition>> rhs;  // K'_1, Rvee, K'_1, Rveevee
};

struct SetReMode {
  bool exhaustive = true;
  int count = 0;
  std::uint64_t seed = 0;
};

/// Evaluates both chains with limit maps computed on demand (shared across
/// calls to the same evaluator).
class SetReEvaluator {
 public:
  explicit SetReEvaluator(int n);
  SetReChains chains(int l, int m, const Composition& a, const Composition& b);

 private:
  const CombPair& column(CombKind kind, int l, int m, const Composition& a, const Composition& b);

  int n_;
  std::map<std::tuple<int, int, int, Composition, Composition>, CombPair> cache_;
};

verify::VerifyReport check_set_re(int n, int l, int m, const SetReMode& mode);

/// Conjectured q -> 0 limit of the unprimed K: z^{-Q_0(g, a)} for every entry.
struct ConjectureEntry {
  Composition a, g;
  std::string limit;  // "0", "diverges", or the limit as a rational function
  int predicted = 0;  // Q_0(g, a)
  bool match = false;
};
struct ConjectureReport {
  int n = 0, l = 0;
  std::vector<ConjectureEntry> entries;
  bool supported() const;
  /// "SUPPORTED" or "REFUTED"
  std::string status() const;
};
ConjectureReport check_k_limit_conjecture(int n, int l);

}  // namespace reflectq::crystal
