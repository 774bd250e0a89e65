// Brute-force reference computations. Nothing here calls into the library paths it checks.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

inline i64 tri(i64 x) { return x <= 1 ? 0 : x * (x - 1) / 2; }

/// Calls visit(parts) for every partition of n into at most max_parts positive parts (nonincreasing).
inline void for_each_partition(i64 n, i64 max_parts, const std::function<void(const std::vector<i64>&)>& visit) {
  std::vector<i64> cur;
  std::function<void(i64, i64)> rec = [&](i64 rest, i64 cap) {
    if (rest == 0) {
      visit(cur);
      return;
    }
    if (static_cast<i64>(cur.size()) == max_parts) return;
    for (i64 p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
}

/// C(n,r) by listing partitions.
inline std::set<i64> spectrum(i64 n, i64 r) {
  std::set<i64> out;
  if (n == 0) return {0};
  for_each_partition(n, r, [&](const std::vector<i64>& parts) {
    i64 s = 0;
    for (i64 p : parts) s += tri(p);
    out.insert(s);
  });
  return out;
}

/// Smallest number of positive parts summing to m with edge sum f, minus one.
inline std::optional<i64> min_r(i64 m, i64 f) {
  std::optional<i64> best;
  for_each_partition(m, m, [&](const std::vector<i64>& parts) {
    i64 s = 0;
    for (i64 p : parts) s += tri(p);
    if (s == f) {
      const i64 r = static_cast<i64>(parts.size()) - 1;
      if (!best || r < *best) best = r;
    }
  });
  return best;
}

/// Is f = xy + z with x + y <= m and (z >= 1 implies x + y + z <= m - 1)?
inline bool in_dm(i64 f, i64 m) {
  for (i64 x = 0; x <= m; ++x)
    for (i64 y = 0; x + y <= m; ++y)
      for (i64 z = 0; z <= f; ++z) {
        if (z >= 1 && x + y + z > m - 1) break;
        if (x * y + z == f) return true;
      }
  return false;
}

/// Every (a, b, c) of positive integers with f = C(a,2) = C(m,2) - C(b,2) = c(m-c), by scanning.
inline std::vector<std::tuple<i64, i64, i64>> efrs_triples(i64 m, i64 f) {
  std::vector<std::tuple<i64, i64, i64>> out;
  for (i64 a = 1; tri(a) <= f; ++a) {
    if (tri(a) != f) continue;
    for (i64 b = 1; tri(b) <= tri(m); ++b) {
      if (tri(m) - tri(b) != f) continue;
      for (i64 c = 1; c <= m; ++c)
        if (c * (m - c) == f) out.emplace_back(a, b, c);
    }
  }
  return out;
}

/// Is v a sum of three squares, by direct enumeration?
// Largest x, then largest y.
inline std::optional<std::tuple<i64, i64, i64>> three_square(i64 v) {
  i64 top = 0;
  while ((top + 1) * (top + 1) <= v) ++top;
  for (i64 x = top; x >= 0; --x)
    for (i64 y = x; y >= 0; --y)
      for (i64 z = y; z >= 0; --z)
        if (x * x + y * y + z * z == v) return std::tuple{x, y, z};
  return std::nullopt;
}

/// R(m) by the plain four-fold loop over ordered tuples.
inline std::map<i64, std::uint64_t> rep_counts(i64 n, i64 N, i64 sum_cap) {
  std::map<i64, std::uint64_t> out;
  for (i64 a = 1; a <= N; ++a)
    for (i64 b = 1; b <= N; ++b)
      for (i64 c = 1; c <= N; ++c)
        for (i64 d = 1; d <= N; ++d) {
          const i64 s = a + b + c + d;
          if (s > sum_cap) continue;
          const i64 q = a * a + b * b + c * c + d * d + (s - n) * (s - n);
          ++out[(q - n) / 2];
        }
  return out;
}

}  // namespace oracle
