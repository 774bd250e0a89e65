#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "induced/arith.hpp"

namespace induced {

using BigInt = boost::multiprecision::cpp_int;

/// x^2 - 7 y^2 = -3.
struct PellSolution {
  i64 k = 0;
  BigInt x, y;
};

/// Solutions 0..k_max generated from (2, 1) by (x, y) -> (8x + 21y, 3x + 8y).
std::vector<PellSolution> pell_solutions(i64 k_max);

/// Pair built from the index-2k solution: t = y - 1, m = 5t + 2, f = C(3t+1, 2).
struct FamilyPair {
  i64 k = 0;
  BigInt t, m, f, a, b, c;
};

/// k >= 1. All identities are re-verified before returning (std::logic_error on failure).
FamilyPair family_pair(i64 k);

enum class TwoPartStatus { Holds, Violated, SkippedExhaustive };
std::string to_string(TwoPartStatus s);

/// Exhaustive check that f != C(y,2) + C(m-y,2) for every 1 <= y <= m/2.
struct TwoPartCheck {
  TwoPartStatus status = TwoPartStatus::SkippedExhaustive;
  BigInt iterations = 0;
  std::optional<BigInt> counterexample;  // y with C(y,2) + C(m-y,2) = f
};
TwoPartCheck check_no_two_part(const BigInt& m, const BigInt& f, const BigInt& exhaustive_limit);

struct AbcReport {
  bool a_holds = false;  // f = C(a,2) = C(m,2) - C(b,2) = c(m-c)
  bool b_holds = false;  // f = C(2t+1,2) + C(2t+1,2) + C(t,2), parts summing to m
  std::array<BigInt, 3> b_parts;
  TwoPartCheck c;
  bool all_pass() const noexcept { return a_holds && b_holds && c.status == TwoPartStatus::Holds; }
};

inline constexpr i64 kDefaultTwoPartLimit = 10'000'000;

AbcReport verify_abc(const FamilyPair& pair, const BigInt& exhaustive_c_limit = kDefaultTwoPartLimit);

BigInt choose2(const BigInt& x);

}  // namespace induced
