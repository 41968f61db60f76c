#include "reflectq/reps/operator_table.hpp"

namespace reflectq::reps {

std::string to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::V: return "V";
    case SpaceKind::Vstar: return "Vstar";
    case SpaceKind::Vvee: return "Vvee";
  }
  return "?";
}

std::string to_string(const Label& label) {
  std::string s;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) s += "x";
    s += weights::to_string(label[i]);
  }
  return s;
}

std::vector<Label> tensor_basis(const std::vector<Space>& spaces) {
  std::vector<Label> out{Label{}};
  for (const auto& s : spaces) {
    auto b = weights::enumerate_B(s.n, s.l);
    std::vector<Label> next;
    next.reserve(out.size() * b.size());
    for (const auto& prefix : out) {
      for (const auto& c : b) {
        Label l = prefix;
        l.push_back(c);
        next.push_back(std::move(l));
      }
    }
    out = std::move(next);
  }
  return out;
}

OperatorTable OperatorTable::identity(const std::vector<Space>& spaces) {
  OperatorTable t(spaces, spaces);
  for (const auto& b : tensor_basis(spaces)) t.add(b, b, RatFunc(1));
  return t;
}

void OperatorTable::add(const Label& in, const Label& out, const RatFunc& c) {
  if (c.is_zero()) return;
  auto& col = cols_[in];
  auto [it, fresh] = col.try_emplace(out, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) {
      col.erase(it);
      if (col.empty()) cols_.erase(in);
    }
  }
}

RatFunc OperatorTable::entry(const Label& in, const Label& out) const {
  auto ci = cols_.find(in);
  if (ci == cols_.end()) return RatFunc();
  auto it = ci->second.find(out);
  return it == ci->second.end() ? RatFunc() : it->second;
}

std::size_t OperatorTable::nonzeros() const {
  std::size_t n = 0;
  for (const auto& [i, col] : cols_) n += col.size();
  return n;
}

OperatorTable OperatorTable::compose(const OperatorTable& rhs) const {
  if (rhs.out_ != in_) throw Error("operator composition with mismatched spaces");
  OperatorTable r(rhs.in_, out_);
  for (const auto& [x, col] : rhs.cols_) {
    // Collect all contributions per output before summing.
    std::map<Label, std::vector<RatFunc>> acc;
    for (const auto& [y, c] : col) {
      auto it = cols_.find(y);
      if (it == cols_.end()) continue;
      for (const auto& [z, d] : it->second) acc[z].push_back(c * d);
    }
    for (auto& [z, parts] : acc) {
      RatFunc s;
      for (const auto& p : parts) s += p;
      if (!s.is_zero()) r.cols_[x][z] = std::move(s);
    }
  }
  return r;
}

OperatorTable& OperatorTable::operator+=(const OperatorTable& o) {
  if (o.in_ != in_ || o.out_ != out_) throw Error("operator sum with mismatched spaces");
  for (const auto& [i, col] : o.cols_) {
    for (const auto& [out, c] : col) add(i, out, c);
  }
  return *this;
}

OperatorTable OperatorTable::scaled(const RatFunc& c) const {
  return map_entries([&](const RatFunc& x) { return x * c; });
}

OperatorTable OperatorTable::embed(const std::vector<Space>& spaces, std::size_t pos) const {
  const std::size_t k = in_.size();
  if (pos + k > spaces.size()) throw Error("operator embedding out of range");
  for (std::size_t i = 0; i < k; ++i) {
    if (spaces[pos + i] != in_[i]) throw Error("operator embedding with mismatched spaces");
  }
  std::vector<Space> out_spaces = spaces;
  for (std::size_t i = 0; i < k; ++i) out_spaces[pos + i] = out_[i];
  OperatorTable r(spaces, out_spaces);
  for (const auto& b : tensor_basis(spaces)) {
    Label sub(b.begin() + static_cast<std::ptrdiff_t>(pos), b.begin() + static_cast<std::ptrdiff_t>(pos + k));
    auto it = cols_.find(sub);
    if (it == cols_.end()) continue;
    for (const auto& [o, c] : it->second) {
      Label full = b;
      for (std::size_t i = 0; i < k; ++i) full[pos + i] = o[i];
      r.cols_[b][full] = c;
    }
  }
  return r;
}

}  // namespace reflectq::reps
