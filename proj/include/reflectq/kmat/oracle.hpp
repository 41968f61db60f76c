#pragma once

#include <map>
#include <utility>

#include "reflectq/weights/composition.hpp"
#include <gmpxx.h>

namespace reflectq::kmat {

/// Entries K^g_a at a rational point, keyed by (a, g).
using NumericK = std::map<std::pair<weights::Composition, weights::Composition>, mpq_class>;

struct OracleResult {
  NumericK entries;
  int unknowns = 0;
  int rank = 0;  // exact rank of the relation matrix over Q
};

/// Solves the intertwining relations for all i at q = q0, z = z0 exactly over
/// Q and normalizes K^{l e1}_{l e1} = 1. Throws Error when the solution
/// space at this point is not one-dimensional.
OracleResult intertwiner_oracle(int n, int l, const mpq_class& q0, const mpq_class& z0);

}  // namespace reflectq::kmat
