#include "induced/squares.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace induced {

bool is_three_square(u64 v) noexcept {
  if (v == 0) return true;
  while (v % 4 == 0) v /= 4;
  return v % 8 != 7;
}

TwoSquareTable::TwoSquareTable(u64 limit) : limit_(limit), bits_(static_cast<std::size_t>(limit) + 1) {
  for (u64 y = 0; y * y <= limit; ++y)
    for (u64 z = 0; z <= y && y * y + z * z <= limit; ++z) bits_.set(static_cast<std::size_t>(y * y + z * z));
}

namespace {

// Odd part congruent to 3 mod 4 means some prime 3 mod 4 divides rem to an odd power.
bool two_square_excluded(u64 rem) noexcept {
  if (rem == 0) return false;
  return (rem >> std::countr_zero(rem)) % 4 == 3;
}

std::optional<std::pair<u64, u64>> two_squares(u64 rem, u64 y_max) {
  if (two_square_excluded(rem)) return std::nullopt;
  u64 y = std::min(y_max, isqrt(rem));
  for (;; --y) {
    const u64 y2 = y * y;
    if (2 * y2 < rem) break;  // z would exceed y
    u64 z = 0;
    if (is_square(rem - y2, &z)) return std::pair{y, z};
    if (y == 0) break;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ThreeSquareDecomp> three_square_decomp(u64 v, const TwoSquareTable* table) {
  if (v == 0) return ThreeSquareDecomp{0, 0, 0, 0};
  for (u64 x = isqrt(v);; --x) {
    if (3 * static_cast<u128>(x) * x < v) break;  // x must be the largest of the three
    const u64 rem = v - x * x;
    if (table && rem <= table->limit() && !table->contains(rem)) continue;
    if (auto yz = two_squares(rem, x)) return ThreeSquareDecomp{v, x, yz->first, yz->second};
    if (x == 0) break;
  }
  return std::nullopt;
}

std::vector<std::pair<i64, i64>> bennett_search(i64 y_limit) {
  if (y_limit < 2) throw std::invalid_argument("bennett_search: y_limit must be at least 2");
  if (y_limit > 50000) throw std::invalid_argument("bennett_search: y_limit above 50000 overflows 64-bit arithmetic");
  std::vector<std::pair<i64, i64>> out;
  for (i64 y = 2; y <= y_limit; ++y) {
    // x(x-1) = C(y^2,2)  <=>  x = (1 + sqrt(1 + 4 C(y^2,2))) / 2
    const u64 rhs = static_cast<u64>(choose2(y * y));
    u64 d = 0;
    if (!is_square(1 + 4 * rhs, &d) || (1 + d) % 2 != 0) continue;
    const auto x = static_cast<i64>((1 + d) / 2);
    if (x >= 1 && static_cast<u64>(x) * static_cast<u64>(x - 1) == rhs) out.emplace_back(x, y);
  }
  return out;
}

i64 witness7_target(i64 n, i64 m, i64 t) {
  const i128 a = static_cast<i128>(n) - 6 * static_cast<i128>(t);
  return narrow(2 * static_cast<i128>(m) + n - a * a - 6 * static_cast<i128>(t) * t);
}

Interval7 witness7_interval(i64 n) {
  if (n < 1) return {};
  const long double nn = static_cast<long double>(n);
  Interval7 iv;
  // lo: smallest m with 14 m >= n^2 + 7n + 29400.
  const i128 lo_num = static_cast<i128>(n) * n + 7 * static_cast<i128>(n) + 29400;
  iv.lo = narrow((lo_num + 13) / 14);
  // hi: largest m with (n^2 - n - 2m)^2 >= 132^2 n^3 and n^2 - n - 2m >= 0.
  const long double approx = (nn * nn - nn) / 2 - 66 * nn * std::sqrt(nn);
  if (approx < -1) return {iv.lo, iv.lo - 1};
  auto ok = [&](i64 m) {
    const i128 rem = static_cast<i128>(n) * n - n - 2 * static_cast<i128>(m);
    return rem >= 0 && rem * rem >= static_cast<i128>(132 * 132) * n * n * n;
  };
  i64 hi = static_cast<i64>(std::floor(approx)) + 2;
  while (hi >= 0 && !ok(hi)) --hi;
  while (ok(hi + 1)) ++hi;
  iv.hi = hi;
  return iv;
}

bool in_witness7_interval(i64 n, i64 m) {
  const Interval7 iv = witness7_interval(n);
  return !iv.empty() && m >= iv.lo && m <= iv.hi;
}

bool validate_witness7(const Witness7& w) {
  const i64 t = w.t;
  const std::array<i64, 7> expect{t + w.s[0], t - w.s[0], t + w.s[1], t - w.s[1], t + w.s[2], t - w.s[2], w.n - 6 * t};
  if (w.parts != expect) return false;
  i64 sum = 0;
  i128 edges = 0;
  for (i64 p : w.parts) {
    if (p < 0 || p > w.n) return false;
    sum += p;
    edges += choose2(p);
  }
  if (sum != w.n || edges != w.m) return false;
  const i128 squares = static_cast<i128>(w.s[0]) * w.s[0] + static_cast<i128>(w.s[1]) * w.s[1] +
                       static_cast<i128>(w.s[2]) * w.s[2];
  return 2 * squares == witness7_target(w.n, w.m, t);
}

Witness7 witness7(i64 n, i64 m, const Witness7Options& options) {
  if (n < 1 || n > 100'000'000) throw PreconditionViolated("witness7: n out of supported range");
  if (!in_witness7_interval(n, m))
    throw PreconditionViolated("witness7: m=" + std::to_string(m) + " lies outside the interval for n=" +
                               std::to_string(n));
  const i64 t_max = n / 7;  // target(t) is increasing on [0, n/7]
  auto target = [&](i64 t) { return witness7_target(n, m, t); };

  i64 t0 = 0;
  if (options.linear_t0_search) {
    while (t0 + 1 <= t_max && target(t0 + 1) <= 0) ++t0;
  } else {
    i64 lo = 0, hi = t_max;  // target(lo) <= 0 invariant
    while (lo < hi) {
      const i64 mid = lo + (hi - lo + 1) / 2;
      if (target(mid) <= 0) lo = mid; else hi = mid - 1;
    }
    t0 = lo;
  }
  if (target(t0) > 0 || t0 + 1 > t_max || target(t0 + 1) <= 0)
    throw WindowExhausted("witness7: no sign change of the target on [0, n/7]");

  Witness7 w;
  w.n = n;
  w.m = m;
  w.t0 = t0;
  w.t_prime = t0 + 1;
  while ((w.t_prime + n) % 8 != 0) ++w.t_prime;

  for (i64 t = t0 + 1; t <= t0 + 10; ++t) {
    if (6 * t > n) break;
    const i64 ft = target(t);
    if (ft <= 0 || ft > t * t || ft % 2 != 0) continue;
    const u64 half = static_cast<u64>(ft / 2);
    const u64 res = half % 16;
    if (res == 0 || res == 7 || res == 12 || res == 15) continue;
    if (!is_three_square(half)) continue;
    const auto d = three_square_decomp(half, options.table);
    if (!d) throw std::logic_error("witness7: three-square search disagrees with the closed form");
    w.t = t;
    w.s = {static_cast<i64>(d->x), static_cast<i64>(d->y), static_cast<i64>(d->z)};
    w.parts = {t + w.s[0], t - w.s[0], t + w.s[1], t - w.s[1], t + w.s[2], t - w.s[2], n - 6 * t};
    w.window_offset = static_cast<int>(t - t0);
    if (!validate_witness7(w)) throw std::logic_error("witness7: substitution check failed");
    return w;
  }
  throw WindowExhausted("witness7: no admissible t in [t0+1, t0+10] for n=" + std::to_string(n) +
                        ", m=" + std::to_string(m));
}

}  // namespace induced
