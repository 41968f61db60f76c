#pragma once

#include <map>
#include <optional>

#include "reflectq/exactalg/ratfunc.hpp"
#include "reflectq/exactalg/series.hpp"

namespace reflectq::qboson {

using alg::RatFunc;

/// (a+)^plus k^k (a-)^minus. Stored words have plus == 0 or minus == 0, which
/// makes the normal form unique (a+ a- = 1 - k removes the mixed ones).
struct NormalWord {
  int plus = 0;
  int k = 0;
  int minus = 0;
  auto operator<=>(const NormalWord&) const = default;
};

/// Element of the q-boson algebra k a+ = q a+ k, k a- = q^-1 a- k,
/// a+ a- = 1 - k, a- a+ = 1 - q k, kept in normal-ordered form.
class BosonElement {
 public:
  BosonElement() = default;
  BosonElement(const RatFunc& c);  // NOLINT(google-explicit-constructor)
  BosonElement(long c) : BosonElement(RatFunc(c)) {}  // NOLINT(google-explicit-constructor)

  static BosonElement word(int plus, int k, int minus, const RatFunc& coeff = RatFunc(1));
  static BosonElement a_plus(int e = 1) { return word(e, 0, 0); }
  static BosonElement a_minus(int e = 1) { return word(0, 0, e); }
  static BosonElement k(int e = 1) { return word(0, e, 0); }

  const std::map<NormalWord, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coefficient(const NormalWord& w) const;

  BosonElement& operator+=(const BosonElement& o);
  BosonElement& operator-=(const BosonElement& o);
  friend BosonElement operator+(BosonElement a, const BosonElement& b) { return a += b; }
  friend BosonElement operator-(BosonElement a, const BosonElement& b) { return a -= b; }
  /// Normal-ordered product.
  friend BosonElement operator*(const BosonElement& a, const BosonElement& b);
  BosonElement scaled(const RatFunc& c) const;

  bool operator==(const BosonElement& o) const { return terms_ == o.terms_; }

  /// "(a+)^i k^m (a-)^j" per term, coefficient in canonical form.
  std::string to_string() const;

 private:
  void add_term(const NormalWord& w, const RatFunc& c);
  std::map<NormalWord, RatFunc> terms_;
};

/// Anti-automorphism a+ <-> a-, k -> k.
BosonElement iota(const BosonElement& x);

/// Common value of plus - minus over all terms; nullopt if inhomogeneous.
/// The zero element has grade 0.
std::optional<int> grade(const BosonElement& x);

/// Tr(w^h x) on the Fock space, as a rational function of q and w.
RatFunc trace(const BosonElement& x);

/// sum_{m <= order} w^m <m|x|m> / (q;q)_m computed directly on Fock vectors.
alg::PowerSeries fock_trace_series(const BosonElement& x, int order);

}  // namespace reflectq::qboson
