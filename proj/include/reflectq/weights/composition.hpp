#pragma once

#include <string>
#include <vector>

namespace reflectq::weights {

/// Element of Z_+^n (or, transiently, Z^n for differences of weights).
using Composition = std::vector<int>;

/// All compositions of l into n parts, lexicographically descending.
std::vector<Composition> enumerate_B(int n, int l);

/// Entry with 1-based cyclic index: i = 0 aliases i = n.
int at(const Composition& a, int i);

/// Unit vector e_j of length n (1-based cyclic index).
Composition unit(int n, int j);
/// l * e_j.
Composition scaled_unit(int n, int j, int l);

int size(const Composition& a);                          // |a|
int brace(const Composition& a);                         // {a} = sum_i i a_i
int pairing(const Composition& a, const Composition& b); // <a, b> = sum_{i<j} a_i b_j
Composition sigma(const Composition& a);                 // (a_2, ..., a_k, a_1)
Composition rho(const Composition& a);                   // reversal
Composition truncate(const Composition& a);              // drop the last entry

Composition operator+(const Composition& a, const Composition& b);
Composition operator-(const Composition& a, const Composition& b);
/// Componentwise a <= b.
bool leq(const Composition& a, const Composition& b);
bool nonnegative(const Composition& a);

/// P_i(a, b) = min(a_{i+1}, b_{i+1}).
int energy_P(int i, const Composition& a, const Composition& b);
/// Q_i(a, b) = min_{1<=k<=n} (sum_{1<=j<k} a_{i+j} + sum_{k<j<=n} b_{i+j}).
int energy_Q(int i, const Composition& a, const Composition& b);

/// One-row tableau: digit i repeated a_i times; dual letters carry a bar.
std::string tableau_str(const Composition& a, bool dual = false);

std::string to_string(const Composition& a);

}  // namespace reflectq::weights
