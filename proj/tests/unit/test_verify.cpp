#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "reflectq/verify/checks.hpp"
#include "reflectq/verify/parallel.hpp"

using namespace reflectq;
using namespace reflectq::verify;
using rmat::RKind;

TEST_CASE("compare_tables reports differences") {
  auto t = rmat::r_table(RKind::plain, 2, 1, 1, alg::RatFunc::var(alg::Var::z));
  CHECK(compare_tables("self", t, t).pass());
  auto bad = t;
  bad.add({{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}, alg::RatFunc(1));
  auto r = compare_tables("perturbed", t, bad);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].index == "(1,0)x(0,1) -> (0,1)x(1,0)");
  CHECK(r.checked == 16);
}

TEST_CASE("Yang-Baxter equations, small instances") {
  for (auto s : {YbeSequence::VVV, YbeSequence::sVV, YbeSequence::ssV, YbeSequence::sss, YbeSequence::vVV,
                 YbeSequence::vvV, YbeSequence::vvv}) {
    INFO(to_string(s));
    CHECK(check_ybe(s, 2, 1, 1, 1).pass());
    CHECK(check_ybe(s, 2, 1, 1, 0).pass());
  }
  CHECK(ybe_sequence_from_string("ssV") == YbeSequence::ssV);
  CHECK_THROWS(ybe_sequence_from_string("xyz"));
}

TEST_CASE("reflection equation, small instances") {
  CHECK(check_reflection(Gauge::star, 2, 1, 1).pass());
  CHECK(check_reflection(Gauge::vee, 2, 1, 1).pass());
  CHECK(check_reflection(Gauge::star, 2, 0, 1).pass());
  CHECK(check_reflection(Gauge::star, 2, 1, 0).pass());
}

TEST_CASE("intertwining checks") {
  CHECK(check_intertwining_r(RKind::plain, 3, 1, 1).pass());
  CHECK(check_intertwining_k(2, 2).pass());
  CHECK(check_intertwining_kprime(2, 1).pass());
}

TEST_CASE("local relation and series identity") {
  CHECK(check_local_relation(2).pass());
  auto y = check_series_identity(6, 3, 11);
  CHECK(y.pass());
  CHECK(y.checked == 21);
  CHECK(check_series_identity(0, 2, 5).pass());
}

TEST_CASE("oracle check") {
  auto r = check_oracle(3, 2, 2, 3);
  CHECK(r.pass());
  CHECK(r.checked == 2 * 37);
}

TEST_CASE("parallel map keeps index order and honours the thread cap") {
  setenv("REFLECTQ_THREADS", "3", 1);
  CHECK(thread_count() == 3);
  auto v = parallel_map(100, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == static_cast<int>(i * i));
  CHECK_THROWS(parallel_map(5, [](std::size_t i) -> int {
    if (i == 3) throw Error("boom");
    return 0;
  }));
  unsetenv("REFLECTQ_THREADS");
}
