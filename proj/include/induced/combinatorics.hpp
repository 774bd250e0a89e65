#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "induced/arith.hpp"

namespace induced {

using Rational = boost::rational<i64>;

/// A target pair: subgraph order m and edge count f.
struct PairMF {
  i64 m = 2;
  i64 f = 0;

  /// Throws std::invalid_argument unless m >= 2 and 0 <= f <= C(m,2).
  static PairMF make(i64 m, i64 f);
  i64 complement() const noexcept { return choose2(m) - f; }
  friend bool operator==(const PairMF&, const PairMF&) = default;
};

/// The five pairs whose density is 1; every other pair has density at most 1/2.
inline constexpr std::array<std::pair<i64, i64>, 5> kSpecialPairs{{{2, 0}, {2, 1}, {4, 3}, {5, 4}, {5, 6}}};

bool is_special_pair(i64 m, i64 f) noexcept;

/// f = C(ell,2) + ellp with 0 <= ellp < ell.
struct UpperDecomp {
  i64 ell = 1;
  i64 ellp = 0;
  friend bool operator==(const UpperDecomp&, const UpperDecomp&) = default;
};

/// f = C(b,2) - bp with 0 <= bp < b - 1.
struct LowerDecomp {
  i64 b = 2;
  i64 bp = 0;
  friend bool operator==(const LowerDecomp&, const LowerDecomp&) = default;
};

UpperDecomp decompose_upper(i64 f);
/// Rejects f <= 0: no b satisfies 0 <= bp < b - 1 for f = 0.
LowerDecomp decompose_lower(i64 f);

struct DmWitness {
  i64 x = 0, y = 0, z = 0;
  friend bool operator==(const DmWitness&, const DmWitness&) = default;
};

/// Finds f = xy + z with x <= y, x + y <= m, and x + y + z <= m - 1 whenever z >= 1.
/// The first witness in (x, y) lexicographic order is returned. O(m).
std::optional<DmWitness> in_dm(i64 f, i64 m);

/// Smallest r such that f is a sum of r+1 values C(x_i,2) with positive x_i summing to m.
std::optional<i64> min_r(i64 m, i64 f);

/// Positive a, b, c with f = C(a,2) = C(m,2) - C(b,2) = c(m-c); c is the smaller root.
struct EfrsTriple {
  i64 a = 0, b = 0, c = 0;
  friend bool operator==(const EfrsTriple&, const EfrsTriple&) = default;
};
std::optional<EfrsTriple> efrs_conditions(i64 m, i64 f);

struct TraceEntry {
  std::string rule;
  /// "rule" for the mechanical decomposition tests, "cited" for bounds taken from known results.
  std::string kind;
  std::vector<std::pair<std::string, i64>> params;
  std::string effect;
};

/// A certified interval for the density of (m, f). Never a computed limit.
///
/// `upper` combines the mechanical rules with the 2/3 bound for pairs outside the special set;
/// `cited_upper` is the separately quoted 1/2 bound. When `exact` is set, lower == upper == exact.
struct Verdict {
  std::optional<Rational> exact;
  Rational upper{1};
  std::optional<Rational> lower;
  Rational cited_upper{1};
  std::vector<TraceEntry> trace;

  Rational best_upper() const { return std::min(upper, cited_upper); }
  bool fired(const std::string& rule) const;
};

Verdict classify_pair(i64 m, i64 f);

}  // namespace induced
