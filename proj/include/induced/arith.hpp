#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace induced {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

/// Edge count of a clique on x vertices, x(x-1)/2. Defined as 0 for x <= 1.
constexpr i64 choose2(i64 x) noexcept { return x <= 1 ? 0 : x * (x - 1) / 2; }

/// Floor of the square root of v, exact for the whole u64 range.
inline u64 isqrt(u64 v) noexcept {
  if (v == 0) return 0;
  auto r = static_cast<u64>(std::sqrt(static_cast<long double>(v)));
  while (static_cast<u128>(r) * r > v) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

inline u128 isqrt(u128 v) noexcept {
  if (v == 0) return 0;
  auto r = static_cast<u128>(std::sqrt(static_cast<long double>(v)));
  // long double keeps 64 mantissa bits, so r is within a few units.
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

/// `root` is written only when v is a perfect square.
inline bool is_square(u64 v, u64* root = nullptr) noexcept {
  // Squares mod 64 are 0, 1, 4, 9, 16, 17, 25, 33, 36, 41, 49, 57.
  constexpr u64 kSquaresMod64 = 0x0202021202030213ULL;
  if (!(kSquaresMod64 >> (v & 63) & 1)) return false;
  const u64 r = isqrt(v);
  if (static_cast<u128>(r) * r != v) return false;
  if (root) *root = r;
  return true;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("64-bit multiplication overflow");
  return out;
}

inline i64 checked_add(i64 a, i64 b) {
  i64 out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("64-bit addition overflow");
  return out;
}

inline i64 narrow(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw std::overflow_error("value does not fit in 64 bits");
  return static_cast<i64>(v);
}

/// Smallest edge count of k cliques (empty ones allowed) covering v vertices: the balanced split.
constexpr i64 balanced_min_edges(i64 v, i64 k) noexcept {
  const i64 q = v / k;
  const i64 rem = v % k;
  return rem * choose2(q + 1) + (k - rem) * choose2(q);
}

}  // namespace induced
