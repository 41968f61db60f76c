#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "reflectq/weights/composition.hpp"

using namespace reflectq::weights;

namespace {
Composition random_comp(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(0, 4);
  Composition a(static_cast<std::size_t>(n));
  for (auto& x : a) x = d(rng);
  return a;
}
}  // namespace

TEST_CASE("enumeration of B_l") {
  CHECK(enumerate_B(2, 1) == std::vector<Composition>{{1, 0}, {0, 1}});
  CHECK(enumerate_B(3, 2).size() == 6);
  auto b55 = enumerate_B(5, 5);
  CHECK(b55.size() == 126);
  CHECK(std::find(b55.begin(), b55.end(), Composition{1, 2, 1, 0, 1}) != b55.end());
  CHECK(std::is_sorted(b55.rbegin(), b55.rend()));
  CHECK(enumerate_B(4, 0) == std::vector<Composition>{{0, 0, 0, 0}});
}

TEST_CASE("statistics") {
  CHECK(pairing({1, 0, 1}, {0, 1, 0}) == 1);
  CHECK(sigma({0, 1, 1, 0, 1}) == Composition{1, 1, 0, 1, 0});
  CHECK(brace({1, 0, 2}) == 7);
  CHECK(rho({1, 2, 3}) == Composition{3, 2, 1});
  CHECK(truncate({1, 2, 3}) == Composition{1, 2});
  CHECK(at({4, 5, 6}, 0) == 6);
  CHECK(at({4, 5, 6}, 4) == 4);
  CHECK(unit(3, 0) == Composition{0, 0, 1});
  CHECK_THROWS(pairing({1, 2}, {1, 2, 3}));
}

TEST_CASE("energy functions") {
  CHECK(energy_P(0, {2, 0}, {1, 1}) == 1);
  CHECK(energy_Q(0, {2, 0}, {1, 1}) == 1);
  std::mt19937 rng(1);
  for (int t = 0; t < 50; ++t) {
    auto a = random_comp(rng, 2), b = random_comp(rng, 2);
    CHECK(energy_Q(0, a, b) == std::min(b[1], a[0]));
  }
}

TEST_CASE("tableau strings") {
  CHECK(tableau_str({1, 2, 1, 0, 1}) == "12235");
  CHECK(tableau_str({0, 1, 0, 3, 1}, true) == "2\xCC\x84" "4\xCC\x84" "4\xCC\x84" "4\xCC\x84" "5\xCC\x84");
  CHECK(tableau_str({0, 0, 0}).empty());
}

TEST_CASE("invariants on random compositions") {
  std::mt19937 rng(2);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + t % 5;
    auto a = random_comp(rng, n), b = random_comp(rng, n);
    Composition s = a;
    for (int k = 0; k < n; ++k) s = sigma(s);
    CHECK(s == a);
    CHECK(rho(rho(a)) == a);
    int diag = 0;
    for (int i = 0; i < n; ++i) diag += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
    CHECK(pairing(a, b) + pairing(b, a) + diag == size(a) * size(b));
    CHECK(size(sigma(a)) == size(a));
    // {a + e_i - e_{i+1}} - {a} = -1 + n [i = 0], cyclically
    for (int i = 0; i < n; ++i) {
      if (n < 2) break;
      Composition d = unit(n, i) - unit(n, i + 1);
      CHECK(brace(a + d) - brace(a) == -1 + (i == 0 ? n : 0));
      CHECK(brace(a - d) - brace(a) == 1 - (i == 0 ? n : 0));
    }
  }
}
