#pragma once

#include <map>
#include <string>
#include <vector>

#include "reflectq/exactalg/ratfunc.hpp"
#include "reflectq/weights/composition.hpp"

namespace reflectq::reps {

using alg::RatFunc;
using weights::Composition;

enum class SpaceKind { V, Vstar, Vvee };

std::string to_string(SpaceKind k);

/// One tensor factor: the (n, l) module of the given kind.
struct Space {
  SpaceKind kind;
  int n;
  int l;
  auto operator<=>(const Space&) const = default;
};

/// Basis label of a tensor product: one composition per factor.
using Label = std::vector<Composition>;

std::string to_string(const Label& label);

/// All basis labels of a tensor product of spaces, in product-lexicographic
/// order of the per-factor enumerations.
std::vector<Label> tensor_basis(const std::vector<Space>& spaces);

/// Sparse linear map between tensor products of modules. Column-oriented:
/// each input label maps to its (output label -> coefficient) image.
/// No stored coefficient is zero.
class OperatorTable {
 public:
  using Column = std::map<Label, RatFunc>;

  OperatorTable() = default;
  OperatorTable(std::vector<Space> in, std::vector<Space> out) : in_(std::move(in)), out_(std::move(out)) {}

  static OperatorTable identity(const std::vector<Space>& spaces);

  const std::vector<Space>& in_spaces() const { return in_; }
  const std::vector<Space>& out_spaces() const { return out_; }
  const std::map<Label, Column>& columns() const { return cols_; }

  void add(const Label& in, const Label& out, const RatFunc& c);
  RatFunc entry(const Label& in, const Label& out) const;
  std::size_t nonzeros() const;
  bool is_zero() const { return cols_.empty(); }

  /// this after rhs.
  OperatorTable compose(const OperatorTable& rhs) const;
  friend OperatorTable operator*(const OperatorTable& a, const OperatorTable& b) { return a.compose(b); }
  OperatorTable& operator+=(const OperatorTable& o);
  friend OperatorTable operator+(OperatorTable a, const OperatorTable& b) { return a += b; }
  friend OperatorTable operator-(OperatorTable a, const OperatorTable& b) { return a += b.scaled(RatFunc(-1)); }
  OperatorTable scaled(const RatFunc& c) const;
  /// Applies f to every entry (zero results are dropped).
  template <class F>
  OperatorTable map_entries(F&& f) const {
    OperatorTable r(in_, out_);
    for (const auto& [i, col] : cols_) {
      for (const auto& [o, c] : col) r.add(i, o, f(c));
    }
    return r;
  }

  /// Acts on factors [pos, pos + in_spaces().size()) of `spaces`, identity elsewhere.
  OperatorTable embed(const std::vector<Space>& spaces, std::size_t pos) const;

  bool operator==(const OperatorTable& o) const { return in_ == o.in_ && out_ == o.out_ && cols_ == o.cols_; }

 private:
  std::vector<Space> in_;
  std::vector<Space> out_;
  std::map<Label, Column> cols_;
};

}  // namespace reflectq::reps
