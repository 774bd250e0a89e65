#include <doctest.h>

#include <random>

#include "induced/combinatorics.hpp"
#include "induced/pell.hpp"

using namespace induced;

TEST_CASE("pell_solutions") {
  const auto s0 = pell_solutions(0);
  REQUIRE(s0.size() == 1);
  CHECK(s0[0].x == 2);
  CHECK(s0[0].y == 1);

  const auto s = pell_solutions(20);
  REQUIRE(s.size() == 21);
  CHECK(s[1].x == 37);
  CHECK(s[1].y == 14);
  CHECK(s[2].x == 590);
  CHECK(s[2].y == 223);
  for (std::size_t k = 0; k < s.size(); ++k) {
    CHECK(s[k].k == static_cast<i64>(k));
    CHECK(s[k].x * s[k].x - 7 * s[k].y * s[k].y == -3);
    if (k % 2 == 0) {
      CHECK(s[k].x % 2 == 0);
      CHECK(s[k].y % 2 == 1);
    }
  }
  CHECK_THROWS_AS(pell_solutions(-1), std::invalid_argument);
}

TEST_CASE("family_pair k = 1") {
  const auto p = family_pair(1);
  CHECK(p.t == 222);
  CHECK(p.m == 1112);
  CHECK(p.f == 222111);
  CHECK(p.a == 667);
  CHECK(p.b == 890);
  CHECK(p.c == 261);
  CHECK(p.c * (p.m - p.c) == p.f);

  const auto r = verify_abc(p);
  CHECK(r.a_holds);
  CHECK(r.b_holds);
  CHECK(r.b_parts == std::array<BigInt, 3>{445, 445, 222});
  CHECK(r.c.status == TwoPartStatus::Holds);
  CHECK(r.c.iterations == 556);
  CHECK(r.all_pass());
  CHECK_THROWS_AS(family_pair(0), std::invalid_argument);
}

TEST_CASE("family_pair k = 2") {
  const auto p = family_pair(2);
  CHECK(p.t == 56640);
  CHECK(p.m == 283202);
  const auto r = verify_abc(p);
  CHECK(r.all_pass());
  CHECK(r.c.iterations == 141601);
}

TEST_CASE("family identities hold symbolically for every k up to 10") {
  for (i64 k = 1; k <= 10; ++k) {
    const auto p = family_pair(k);
    CHECK(p.m == 5 * p.t + 2);
    CHECK(choose2(p.m) == choose2(p.a) + choose2(p.b));
    CHECK(p.f == 2 * choose2(BigInt(2 * p.t + 1)) + choose2(p.t));
    const auto r = verify_abc(p, 0);
    CHECK(r.a_holds);
    CHECK(r.b_holds);
    CHECK(r.c.status == TwoPartStatus::SkippedExhaustive);
    CHECK_FALSE(r.all_pass());
  }
}

TEST_CASE("two-part check finds counterexamples") {
  const auto c = check_no_two_part(6, 6, 100);
  CHECK(c.status == TwoPartStatus::Violated);
  REQUIRE(c.counterexample);
  CHECK(*c.counterexample == 3);
  CHECK(to_string(TwoPartStatus::Violated) == "violated");

  for (i64 m = 2; m <= 40; ++m) {
    for (i64 f = 0; f <= induced::choose2(m); ++f) {
      bool expected = true;
      for (i64 y = 1; y <= m / 2; ++y)
        if (induced::choose2(y) + induced::choose2(m - y) == f) expected = false;
      const auto got = check_no_two_part(m, f, 1000);
      REQUIRE((got.status == TwoPartStatus::Holds) == expected);
    }
  }
}

TEST_CASE("family pairs have clique rank two and density one half") {
  for (i64 k = 1; k <= 3; ++k) {
    const auto p = family_pair(k);
    const i64 m = p.m.convert_to<i64>();
    const i64 f = p.f.convert_to<i64>();
    CHECK(min_r(m, f) == 2);
    const auto v = classify_pair(m, f);
    REQUIRE(v.exact);
    CHECK(*v.exact == Rational(1, 2));
  }
}

TEST_CASE("Jensen obstruction sampled") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<i64> pick(1, 1'000'000);
  auto check = [](i64 t) {
    const i64 lo = (5 * t) / 2, hi = (5 * t + 1) / 2;
    const BigInt lhs = choose2(BigInt(lo + 1)) + choose2(BigInt(hi + 1));
    return lhs > choose2(BigInt(3 * t + 1));
  };
  for (i64 t = 1; t <= 2000; ++t) REQUIRE(check(t));
  for (int i = 0; i < 20000; ++i) REQUIRE(check(pick(rng)));
  CHECK(check(1'000'000));
}
