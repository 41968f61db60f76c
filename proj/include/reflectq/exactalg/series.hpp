#pragma once

#include "reflectq/exactalg/ratfunc.hpp"

namespace reflectq::alg {

/// Truncated power series sum_{k=0}^{order} c_k v^k with coefficients free of v.
class PowerSeries {
 public:
  PowerSeries(Var v, int order);
  /// Expansion of f around v = 0; f must be regular there.
  static PowerSeries expand(const RatFunc& f, Var v, int order);

  Var var() const { return var_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RatFunc& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  RatFunc& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<RatFunc>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  /// Truncated to the smaller of the two orders.
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  PowerSeries scaled(const RatFunc& c) const;

  bool operator==(const PowerSeries& o) const = default;

 private:
  Var var_;
  std::vector<RatFunc> coeffs_;
};

}  // namespace reflectq::alg
