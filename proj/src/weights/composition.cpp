#include "reflectq/weights/composition.hpp"

#include <algorithm>
#include <numeric>

#include "reflectq/exactalg/poly.hpp"

namespace reflectq::weights {

namespace {

void check_same_length(const Composition& a, const Composition& b) {
  if (a.size() != b.size()) throw Error("composition length mismatch");
}

void fill(std::vector<Composition>& out, Composition& cur, std::size_t pos, int left) {
  if (pos + 1 == cur.size()) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (int v = left; v >= 0; --v) {
    cur[pos] = v;
    fill(out, cur, pos + 1, left - v);
  }
}

std::size_t cyclic(int n, int i) { return static_cast<std::size_t>(((i - 1) % n + n) % n); }

}  // namespace

std::vector<Composition> enumerate_B(int n, int l) {
  if (n < 1) throw Error("rank must be positive");
  if (l < 0) return {};
  std::vector<Composition> out;
  Composition cur(static_cast<std::size_t>(n), 0);
  fill(out, cur, 0, l);
  return out;
}

int at(const Composition& a, int i) { return a[cyclic(static_cast<int>(a.size()), i)]; }

Composition unit(int n, int j) { return scaled_unit(n, j, 1); }

Composition scaled_unit(int n, int j, int l) {
  Composition e(static_cast<std::size_t>(n), 0);
  e[cyclic(n, j)] = l;
  return e;
}

int size(const Composition& a) { return std::accumulate(a.begin(), a.end(), 0); }

int brace(const Composition& a) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<int>(i + 1) * a[i];
  return s;
}

int pairing(const Composition& a, const Composition& b) {
  check_same_length(a, b);
  int s = 0;
  int tail = 0;  // sum of b_j for j > i
  for (std::size_t i = a.size(); i-- > 0;) {
    s += a[i] * tail;
    tail += b[i];
  }
  return s;
}

Composition sigma(const Composition& a) {
  Composition r = a;
  if (!r.empty()) std::rotate(r.begin(), r.begin() + 1, r.end());
  return r;
}

Composition rho(const Composition& a) { return Composition(a.rbegin(), a.rend()); }

Composition truncate(const Composition& a) {
  if (a.empty()) throw Error("cannot truncate an empty composition");
  return Composition(a.begin(), a.end() - 1);
}

Composition operator+(const Composition& a, const Composition& b) {
  check_same_length(a, b);
  Composition r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Composition operator-(const Composition& a, const Composition& b) {
  check_same_length(a, b);
  Composition r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool leq(const Composition& a, const Composition& b) {
  check_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool nonnegative(const Composition& a) {
  return std::all_of(a.begin(), a.end(), [](int v) { return v >= 0; });
}

int energy_P(int i, const Composition& a, const Composition& b) {
  check_same_length(a, b);
  return std::min(at(a, i + 1), at(b, i + 1));
}

int energy_Q(int i, const Composition& a, const Composition& b) {
  check_same_length(a, b);
  const int n = static_cast<int>(a.size());
  int best = 0;
  for (int k = 1; k <= n; ++k) {
    int s = 0;
    for (int j = 1; j < k; ++j) s += at(a, i + j);
    for (int j = k + 1; j <= n; ++j) s += at(b, i + j);
    if (k == 1 || s < best) best = s;
  }
  return best;
}

std::string tableau_str(const Composition& a, bool dual) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int c = 0; c < a[i]; ++c) {
      s += std::to_string(i + 1);
      if (dual) s += "\xCC\x84";  // combining macron
    }
  }
  return s;
}

std::string to_string(const Composition& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

}  // namespace reflectq::weights
