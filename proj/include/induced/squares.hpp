#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "induced/arith.hpp"
#include "induced/bit_vector.hpp"
#include "induced/errors.hpp"

namespace induced {

/// x^2 + y^2 + z^2 = target with x >= y >= z >= 0.
struct ThreeSquareDecomp {
  u64 target = 0;
  u64 x = 0, y = 0, z = 0;
  friend bool operator==(const ThreeSquareDecomp&, const ThreeSquareDecomp&) = default;
};

/// Closed form: v is a sum of three squares unless v = 4^a (8b + 7).
bool is_three_square(u64 v) noexcept;

/// Membership table of y^2 + z^2 for all values up to a limit, built by enumeration.
class TwoSquareTable {
 public:
  explicit TwoSquareTable(u64 limit);
  u64 limit() const noexcept { return limit_; }
  bool contains(u64 w) const noexcept { return bits_.test(static_cast<std::size_t>(w)); }

 private:
  u64 limit_;
  BitVector bits_;
};

/// Constructive search: x descends from floor(sqrt v), the remainder is split as y^2 + z^2 with
/// y descending. Returns the decomposition with the largest x, then the largest y.
/// The optional table skips remainders that are not sums of two squares; results are identical.
std::optional<ThreeSquareDecomp> three_square_decomp(u64 v, const TwoSquareTable* table = nullptr);

/// All positive solutions of 2 C(x,2) = C(y^2,2) with 2 <= y <= y_limit, ascending in y.
std::vector<std::pair<i64, i64>> bennett_search(i64 y_limit);

/// Seven cliques (t+s1, t-s1, t+s2, t-s2, t+s3, t-s3, n-6t) covering n vertices with m edges.
struct Witness7 {
  i64 n = 0, m = 0;
  i64 t = 0;
  std::array<i64, 3> s{};
  std::array<i64, 7> parts{};
  i64 t0 = 0;        // last t with target(t) <= 0
  i64 t_prime = 0;   // first t in [t0+1, t0+8] with t + n = 0 (mod 8)
  int window_offset = 0;  // t - t0, in [1, 10]
};

/// 2m + n - (n-6t)^2 - 6t^2: twice the required sum of three squares at split size t.
i64 witness7_target(i64 n, i64 m, i64 t);

/// The integer range [ceil(n^2/14 + n/2 + 2100), floor((n^2-n)/2 - 66 n^{3/2})]; empty when lo > hi.
struct Interval7 {
  i64 lo = 0, hi = -1;
  bool empty() const noexcept { return lo > hi; }
};
Interval7 witness7_interval(i64 n);
bool in_witness7_interval(i64 n, i64 m);

/// No split size in the ten-wide window satisfied every condition.
class WindowExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Witness7Options {
  /// Locate t0 by a linear scan instead of bisection.
  bool linear_t0_search = false;
  const TwoSquareTable* table = nullptr;
};

/// Throws PreconditionViolated when m lies outside witness7_interval(n), WindowExhausted if the scan fails.
/// Every returned witness has passed validate_witness7.
Witness7 witness7(i64 n, i64 m, const Witness7Options& options = {});

bool validate_witness7(const Witness7& w);

}  // namespace induced
