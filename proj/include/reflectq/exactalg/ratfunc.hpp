#pragma once

#include <utility>
#include <vector>

#include "reflectq/exactalg/poly.hpp"

namespace reflectq::alg {

/// Rational values for every variable (unused entries are ignored).
using Point = std::array<mpq_class, kNumVars>;

mpq_class evaluate(const Poly& p, const Point& at);

/// Reduced quotient num/den of polynomials. gcd(num, den) = 1 including integer
/// content, and the leading coefficient of den is positive, so equal values
/// have identical representations.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RatFunc(const mpq_class& c);

  /// Reduces num/den; throws on a zero denominator.
  static RatFunc fraction(const Poly& num, const Poly& den);
  static RatFunc var(Var v, int e = 1);
  /// c * prod v^e[v], exponents of either sign.
  static RatFunc laurent(const mpz_class& c, const Exponents& e);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  mpq_class constant_value() const;
  VarMask vars() const { return num_.vars() | den_.vars(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

  RatFunc inverse() const;
  /// Integer power, negative exponents allowed for non-zero values.
  RatFunc pow(int e) const;

  mpq_class evaluate(const Point& at) const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::size_t hash() const;
  /// "num: ...; den: ..."
  std::string to_string() const;

 private:
  RatFunc(Poly num, Poly den, int) : num_(std::move(num)), den_(std::move(den)) {}
  static RatFunc normalized_sign(Poly num, Poly den);

  Poly num_;
  Poly den_;
};

inline RatFunc pow(const RatFunc& f, int e) { return f.pow(e); }

using Binding = std::pair<Var, RatFunc>;

/// Simultaneous substitution of variables by rational functions.
RatFunc substitute(const RatFunc& f, const std::vector<Binding>& bindings);

struct LowestOrder {
  int order;
  RatFunc leading;
};

/// f = v^order (leading + O(v)) with leading free of v.
LowestOrder lowest_order(const RatFunc& f, Var v);

}  // namespace reflectq::alg
