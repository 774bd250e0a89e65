#include "induced/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace induced {

PairMF PairMF::make(i64 m, i64 f) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  if (f < 0 || f > choose2(m)) throw std::invalid_argument("f must lie in [0, C(m,2)]");
  return PairMF{m, f};
}

bool is_special_pair(i64 m, i64 f) noexcept {
  return std::any_of(kSpecialPairs.begin(), kSpecialPairs.end(),
                     [&](const auto& p) { return p.first == m && p.second == f; });
}

UpperDecomp decompose_upper(i64 f) {
  if (f < 0) throw std::invalid_argument("decompose_upper: f must be non-negative");
  // Largest ell >= 1 with C(ell,2) <= f.
  i64 ell = static_cast<i64>((1 + isqrt(static_cast<u64>(1) + 8 * static_cast<u64>(f))) / 2);
  while (choose2(ell) > f) --ell;
  while (choose2(ell + 1) <= f) ++ell;
  ell = std::max<i64>(ell, 1);
  return {ell, f - choose2(ell)};
}

LowerDecomp decompose_lower(i64 f) {
  if (f < 1) throw std::invalid_argument("decompose_lower: f must be positive");
  // Smallest b with C(b,2) >= f; then C(b-1,2) < f forces bp < b - 1.
  i64 b = static_cast<i64>((1 + isqrt(static_cast<u64>(1) + 8 * static_cast<u64>(f))) / 2);
  while (choose2(b) < f) ++b;
  while (b > 2 && choose2(b - 1) >= f) --b;
  return {b, choose2(b) - f};
}

std::optional<DmWitness> in_dm(i64 f, i64 m) {
  if (m < 2 || f < 0) throw std::invalid_argument("in_dm: need m >= 2 and f >= 0");
  if (f == 0) return DmWitness{0, 0, 0};
  if (f <= m - 1) return DmWitness{0, 0, f};
  for (i64 x = 1; 2 * x <= m; ++x) {
    std::optional<i64> best;
    if (f % x == 0) {
      const i64 y = f / x;
      if (y >= x && x + y <= m) best = y;
    }
    // z >= 1: x + y + (f - xy) <= m - 1 and f - xy >= 1.
    const i64 y_hi = (f - 1) / x;
    i64 y_lo = x;
    bool feasible = true;
    if (x == 1) {
      feasible = f <= m - 2;
    } else {
      const i64 num = f + x - (m - 1);
      if (num > 0) y_lo = std::max(y_lo, (num + x - 2) / (x - 1));
    }
    if (feasible && y_lo <= y_hi && (!best || y_lo < *best)) best = y_lo;
    if (best) return DmWitness{x, *best, f - x * *best};
  }
  return std::nullopt;
}

namespace {

// Positive x <= s/2 with C(x,2) + C(s-x,2) = t and x >= lo, if any.
std::optional<i64> two_part_root(i64 s, i64 t, i64 lo) {
  const i128 disc = static_cast<i128>(4) * t + 2 * static_cast<i128>(s) - static_cast<i128>(s) * s;
  if (disc < 0) return std::nullopt;
  const u128 d = isqrt(static_cast<u128>(disc));
  if (static_cast<i128>(d * d) != disc) return std::nullopt;
  const i128 num = static_cast<i128>(s) - static_cast<i128>(d);
  if (num < 0 || num % 2 != 0) return std::nullopt;
  const i64 x = static_cast<i64>(num / 2);
  if (x < lo) return std::nullopt;
  return x;
}

// Can t be written as the edge sum of exactly j cliques of size >= lo whose sizes sum to s?
bool representable(i64 j, i64 s, i64 t, i64 lo) {
  if (j == 1) return s >= lo && choose2(s) == t;
  if (s < j * lo) return false;
  if (t < balanced_min_edges(s, j)) return false;
  const i128 max_edges = static_cast<i128>(j - 1) * choose2(lo) + choose2(s - (j - 1) * lo);
  if (t > max_edges) return false;
  if (j == 2) return two_part_root(s, t, lo).has_value();
  for (i64 p = lo; p * j <= s; ++p) {
    const i64 rest = t - choose2(p);
    if (rest < 0) break;
    if (representable(j - 1, s - p, rest, p)) return true;
  }
  return false;
}

}  // namespace

std::optional<i64> min_r(i64 m, i64 f) {
  PairMF::make(m, f);
  for (i64 r = 0; r < m; ++r)
    if (representable(r + 1, m, f, 1)) return r;
  return std::nullopt;
}

std::optional<EfrsTriple> efrs_conditions(i64 m, i64 f) {
  PairMF::make(m, f);
  auto triangular_root = [](i64 v) -> std::optional<i64> {
    u64 d = 0;
    if (!is_square(1 + 8 * static_cast<u64>(v), &d)) return std::nullopt;
    return static_cast<i64>((1 + d) / 2);
  };
  const auto a = triangular_root(f);
  const auto b = triangular_root(choose2(m) - f);
  if (!a || !b) return std::nullopt;
  const i64 disc = m * m - 4 * f;
  u64 d = 0;
  if (disc < 0 || !is_square(static_cast<u64>(disc), &d)) return std::nullopt;
  if ((m - static_cast<i64>(d)) % 2 != 0) return std::nullopt;
  i64 c = (m - static_cast<i64>(d)) / 2;
  if (c < 1) c = (m + static_cast<i64>(d)) / 2;
  if (c < 1 || c * (m - c) != f) return std::nullopt;
  return EfrsTriple{*a, *b, c};
}

bool Verdict::fired(const std::string& rule) const {
  return std::any_of(trace.begin(), trace.end(), [&](const TraceEntry& e) { return e.rule == rule; });
}

Verdict classify_pair(i64 m, i64 f) {
  const PairMF pair = PairMF::make(m, f);
  const i64 fc = pair.complement();
  Verdict v;
  v.trace.push_back({"complement", "rule", {{"f", f}, {"complement", fc}}, "both values are tested"});

  if (is_special_pair(m, f)) {
    v.exact = v.upper = v.cited_upper = Rational(1);
    v.lower = Rational(1);
    v.trace.push_back({"special-pair", "cited", {{"m", m}, {"f", f}}, "exact 1"});
    return v;
  }

  const std::array<i64, 2> values{f, fc};
  const Rational half(1, 2);

  for (const i64 g : values) {
    const auto [ell, ellp] = decompose_upper(g);
    if (ell < m && ellp >= m - ell) {
      v.exact = v.upper = Rational(0);
      v.lower = Rational(0);
      v.cited_upper = Rational(0);
      v.trace.push_back({"upper-decomposition", "rule", {{"value", g}, {"ell", ell}, {"ellp", ellp}}, "exact 0"});
    }
  }
  if (v.exact) return v;

  v.upper = Rational(2, 3);
  v.cited_upper = half;
  v.trace.push_back({"two-thirds-bound", "cited", {{"m", m}, {"f", f}}, "upper 2/3 outside the special set"});
  v.trace.push_back({"half-bound", "cited", {{"m", m}, {"f", f}}, "upper 1/2 outside the special set"});

  for (const i64 g : values) {
    if (g < 1) continue;
    const auto [b, bp] = decompose_lower(g);
    if (2 * bp > b && bp < b - 1) {
      v.upper = half;
      v.trace.push_back({"lower-decomposition", "rule", {{"value", g}, {"b", b}, {"bp", bp}}, "upper 1/2"});
    }
  }

  const i64 window_lo = (m - 1) * (m - 1) / 4;
  const i64 window_hi = m * m / 4;
  for (const i64 g : values) {
    if (g < window_lo || g > window_hi) {
      v.upper = half;
      v.trace.push_back({"quarter-window", "rule", {{"value", g}, {"lo", window_lo}, {"hi", window_hi}}, "upper 1/2"});
    }
  }

  for (const i64 g : values) {
    if (!in_dm(g, m)) {
      v.upper = half;
      v.trace.push_back({"dm-membership", "rule", {{"value", g}, {"m", m}}, "upper 1/2"});
    }
  }

  for (const i64 g : values) {
    const auto triple = efrs_conditions(m, g);
    if (!triple) continue;
    const auto r = min_r(m, g);
    if (!r || *r < 2) continue;
    const Rational bound(1, *r);
    if (!v.lower || bound > *v.lower) v.lower = bound;
    v.trace.push_back({"clique-rank-lower", "cited",
                       {{"value", g}, {"a", triple->a}, {"b", triple->b}, {"c", triple->c}, {"r", *r}},
                       "lower 1/r"});
    if (*r == 2 || *r >= 5) {
      if (v.exact && *v.exact != bound) throw std::logic_error("classify_pair: conflicting exact values");
      v.exact = bound;
      v.trace.push_back({"clique-rank-exact", "cited", {{"value", g}, {"r", *r}}, "exact 1/r"});
    }
  }
  if (v.exact) {
    v.upper = v.cited_upper = *v.exact;
    v.lower = *v.exact;
  }
  return v;
}

}  // namespace induced
