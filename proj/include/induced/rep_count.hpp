#pragma once

#include <cstdint>
#include <vector>

#include "induced/arith.hpp"

namespace induced {

/// Q(x) = x1^2 + x2^2 + x3^2 + x4^2 + (x1 + x2 + x3 + x4 - n)^2.
i64 quadratic_form(i64 n, i64 x1, i64 x2, i64 x3, i64 x4) noexcept;

/// counts[m] = number of ordered 4-tuples 1 <= x_i <= N, sum <= sum_cap, with Q(x) = 2m + n.
/// Each such tuple, with fifth part n - sum, is a five-clique partition with m edges.
struct RepHistogram {
  i64 n = 0, N = 0, sum_cap = 0;
  std::vector<u64> counts;  // indexed by m in [0, C(n,2)]

  u64 total() const noexcept;
  u64 at(i64 m) const noexcept { return m >= 0 && m < static_cast<i64>(counts.size()) ? counts[static_cast<std::size_t>(m)] : 0; }
};

struct RepOptions {
  unsigned threads = 1;
  /// Reject when the sorted-tuple count estimate N^4/24 exceeds this.
  double max_iterations = 2e10;
};

/// Iterates x1 <= x2 <= x3 <= x4 and weights each by its number of distinct orderings.
RepHistogram rep_histogram(i64 n, i64 N, i64 sum_cap, const RepOptions& options = {});

struct ExceptionalReport {
  i64 lo = 0, hi = -1;  // integer scan range
  bool empty = true;
  i64 range_length = 0;
  i64 zeros = 0;
  i64 nonzeros = 0;
  double fraction = 0;  // zeros / range_length
};

/// Counts m in [n^2/10 + lo_margin, (n^2-n)/2 - hi_margin] with R(m) = 0.
ExceptionalReport exceptional_count(const RepHistogram& h, double lo_margin, double hi_margin);
ExceptionalReport exceptional_count(i64 n, i64 N, double lo_margin, double hi_margin, const RepOptions& options = {});

/// Coordinate cap floor(n/5 - n/ln n) and margin n^2/ln n, natural logarithm.
struct FaithfulParameters {
  i64 N = 0;
  double margin = 0;
};
FaithfulParameters faithful_parameters(i64 n);

}  // namespace induced
