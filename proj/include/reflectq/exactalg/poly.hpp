#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace reflectq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace reflectq

namespace reflectq::alg {

/// The fixed scalar symbols. Declaration order is the canonical symbol order
/// used by the graded-lex monomial order (q is the largest variable).
enum class Var : std::uint8_t { q = 0, p, z, x, y, lam, mu, nu, w };

inline constexpr int kNumVars = 9;
inline constexpr std::array<Var, kNumVars> kAllVars = {Var::q,   Var::p,  Var::z,  Var::x, Var::y,
                                                       Var::lam, Var::mu, Var::nu, Var::w};

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

inline constexpr int index_of(Var v) { return static_cast<int>(v); }

/// Exponent vector, possibly with negative entries (Laurent monomials).
using Exponents = std::array<int, kNumVars>;

/// Bit set of variables.
using VarMask = std::uint16_t;
inline constexpr VarMask bit(Var v) { return static_cast<VarMask>(1u << index_of(v)); }

/// A monomial q^a p^b ... w^i with non-negative exponents, packed into 128 bits
/// so that unsigned comparison of the packed word is the graded-lex order.
class Monomial {
 public:
  using Packed = unsigned __int128;
  static constexpr int kBits = 12;
  static constexpr int kMaxExponent = (1 << kBits) - 1;

  constexpr Monomial() = default;

  static Monomial from_exponents(const Exponents& e);
  static Monomial of(Var v, int e = 1);

  int exponent(Var v) const {
    return static_cast<int>((bits_ >> shift(v)) & static_cast<Packed>(kMaxExponent));
  }
  int degree() const { return static_cast<int>(bits_ >> kDegreeShift); }
  Exponents exponents() const;
  VarMask vars() const;
  bool is_one() const { return bits_ == 0; }
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;
  /// Requires `o.divides(*this)`.
  Monomial operator/(const Monomial& o) const;
  Monomial with_exponent(Var v, int e) const;
  /// Componentwise minimum.
  static Monomial gcd(const Monomial& a, const Monomial& b);

  Packed packed() const { return bits_; }
  auto operator<=>(const Monomial&) const = default;

  std::string to_string() const;

 private:
  static constexpr int kDegreeShift = kNumVars * kBits;
  static constexpr int shift(Var v) { return (kNumVars - 1 - index_of(v)) * kBits; }
  explicit Monomial(Packed bits) : bits_(bits) {}
  Packed bits_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    auto b = m.packed();
    auto lo = static_cast<std::uint64_t>(b);
    auto hi = static_cast<std::uint64_t>(b >> 64);
    return static_cast<std::size_t>(lo * 0x9E3779B97F4A7C15ull ^ (hi + 0x7f4a7c15ull + (lo << 6)));
  }
};

struct Term {
  Monomial mono;
  mpz_class coeff;
};

/// Sparse multivariate polynomial with integer coefficients. Terms are stored
/// in strictly decreasing graded-lex order; no stored coefficient is zero.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  explicit Poly(const mpz_class& c);

  static Poly var(Var v, int e = 1);
  static Poly monomial(const mpz_class& c, const Monomial& m);
  /// Sorts and combines arbitrary terms.
  static Poly from_terms(std::vector<Term> terms);
  /// Terms already strictly decreasing with non-zero coefficients.
  static Poly from_sorted_unchecked(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].coeff == 1; }
  /// Value of a constant polynomial.
  mpz_class constant_value() const;
  const Term& leading() const { return terms_.front(); }
  int sign() const { return is_zero() ? 0 : sgn(terms_.front().coeff); }

  int total_degree() const { return is_zero() ? -1 : terms_.front().mono.degree(); }
  int degree(Var v) const;
  int min_degree(Var v) const;
  VarMask vars() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(const mpz_class& c) const;
  Poly mul_term(const Monomial& m, const mpz_class& c) const;
  Poly pow(int e) const;

  /// Quotient when `d` divides exactly, otherwise nullopt.
  std::optional<Poly> divide_exact(const Poly& d) const;
  /// Divides every coefficient by `c`, which must divide them exactly.
  Poly divexact(const mpz_class& c) const;
  /// Divides every monomial by `m`, which must divide them all.
  Poly divexact(const Monomial& m) const;

  /// Positive gcd of the coefficients (zero for the zero polynomial).
  mpz_class content() const;
  /// Componentwise minimum exponent over all terms.
  Monomial monomial_content() const;
  /// Largest absolute coefficient.
  mpz_class max_norm() const;

  /// Replaces `v` by the integer `value`.
  Poly evaluate_at(Var v, const mpz_class& value) const;
  /// Coefficient of v^e as a polynomial in the remaining variables.
  Poly coefficient(Var v, int e) const;
  /// Coefficients of v^0 .. v^deg.
  std::vector<Poly> coefficients(Var v) const;

  std::string to_string() const;
  bool operator==(const Poly& o) const;
  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

inline Poly pow(const Poly& p, int e) { return p.pow(e); }

}  // namespace reflectq::alg
