#pragma once

#include <map>
#include <utility>
#include <vector>

#include "reflectq/exactalg/ratfunc.hpp"

namespace reflectq::alg {

/// Fraction kept as a product of known polynomial factors:
/// v^shift * num / den_int * prod atom^e, with e of either sign.
///
/// Binomials m +- 1 are stored as their cyclotomic factors, so products only
/// add exponents. Adding fractions takes the common factors out and expands
/// the rest; no gcd is ever computed. The representation is not canonical;
/// is_zero() is exact, and to_ratfunc() gives the reduced form.
class FactoredFrac {
 public:
  FactoredFrac() = default;
  FactoredFrac(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  static FactoredFrac laurent(const mpz_class& c, const Exponents& e);

  /// Multiplies by p^power; a negative power puts p into the denominator.
  void mul_factor(const Poly& p, int power = 1);
  /// Multiplies by v^e for a single variable, e of either sign.
  void mul_var(Var v, int e);

  bool is_zero() const { return num_.is_zero(); }
  /// Terms of the expanded part of the numerator.
  std::size_t num_terms() const { return num_.terms().size(); }
  std::size_t atom_count() const { return atoms_.size(); }

  FactoredFrac operator-() const;
  friend FactoredFrac operator+(const FactoredFrac& a, const FactoredFrac& b) { return sum({a, b}); }
  friend FactoredFrac operator-(const FactoredFrac& a, const FactoredFrac& b) { return sum({a, -b}); }
  friend FactoredFrac operator*(const FactoredFrac& a, const FactoredFrac& b);
  FactoredFrac& operator+=(const FactoredFrac& o) { return *this = *this + o; }
  FactoredFrac& operator*=(const FactoredFrac& o) { return *this = *this * o; }

  /// Sum over a common denominator. Factors present in every term stay
  /// factored; the others are multiplied in Horner fashion. The result is
  /// cancelled.
  static FactoredFrac sum(const std::vector<FactoredFrac>& terms);

  /// Divides out denominator factors that divide the numerator.
  void cancel();
  RatFunc to_ratfunc() const;

 private:
  void add_atom(const Poly& atom, int e);
  int exponent_of(const Poly& atom) const;

  Poly num_;
  Exponents shift_{};
  mpz_class den_int_ = 1;
  // primitive, positive leading coefficient, no monomial factor, nonzero e
  std::vector<std::pair<Poly, int>> atoms_;
};

}  // namespace reflectq::alg
