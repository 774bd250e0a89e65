#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "induced/arith.hpp"
#include "induced/bit_vector.hpp"

namespace induced {

/// Clique sizes summing to n, stored nonincreasing. Zero parts are dropped.
struct CliquePartition {
  i64 n = 0;
  std::vector<i64> parts;

  i64 edge_sum() const noexcept;
  bool valid() const noexcept;  // sizes non-negative, nonincreasing, summing to n
  friend bool operator==(const CliquePartition&, const CliquePartition&) = default;
};

/// Membership table over edge counts [0, C(n,2)].
/// Holds C(n,r) when r is set, or a brute-forced S_n(m,f) when it is not.
class EdgeSpectrum {
 public:
  EdgeSpectrum(i64 n, std::optional<i64> r, BitVector bits);

  i64 n() const noexcept { return n_; }
  std::optional<i64> r() const noexcept { return r_; }
  i64 universe() const noexcept { return choose2(n_); }

  bool contains(i64 e) const noexcept { return e >= 0 && bits_.test(static_cast<std::size_t>(e)); }
  i64 count() const noexcept { return static_cast<i64>(bits_.count()); }
  std::optional<i64> min() const noexcept;
  std::optional<i64> max() const noexcept;
  std::vector<i64> members() const;
  const BitVector& bits() const noexcept { return bits_; }

  friend bool operator==(const EdgeSpectrum&, const EdgeSpectrum&) = default;

 private:
  i64 n_;
  std::optional<i64> r_;
  BitVector bits_;
};

struct SpectrumOptions {
  /// Upper bound on DP table memory; larger requests throw ResourceLimitExceeded.
  std::size_t memory_cap_bytes = std::size_t{2} << 30;
};

/// Every layer of the reachability DP for C(n,r), kept so that members can be traced back to partitions.
///
/// Layer k holds, for each vertex total v, the edge sums reachable with k cliques. Only prefixes of
/// an ascending part sequence are needed, so layer k stops at v = floor(k n / r) and the k-th part
/// p satisfies ceil(u/(k-1)) <= p <= (n-u)/(r-k+1) where u is the previous total.
class SpectrumTable {
 public:
  SpectrumTable(i64 n, i64 r, const SpectrumOptions& options = {});
  ~SpectrumTable();
  SpectrumTable(SpectrumTable&&) noexcept;
  SpectrumTable& operator=(SpectrumTable&&) noexcept;

  i64 n() const noexcept;
  i64 r() const noexcept;
  const EdgeSpectrum& spectrum() const noexcept;
  /// A partition with edge sum `edges` and at most r parts, or nullopt if `edges` is not a member.
  std::optional<CliquePartition> witness(i64 edges) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Bytes the DP needs for (n, r): all layers when keep_all_layers, else the two largest adjacent ones.
std::size_t spectrum_memory_estimate(i64 n, i64 r, bool keep_all_layers);

/// C(n,r) with two live layers at a time.
EdgeSpectrum spectrum(i64 n, i64 r, const SpectrumOptions& options = {});

std::optional<CliquePartition> member_witness(i64 n, i64 r, i64 edges, const SpectrumOptions& options = {});

struct DensityReport {
  i64 n = 0, r = 0;
  i64 count = 0;
  double density = 0.0;
  i64 min_element = 0;
  bool min_bound_ok = false;    // min >= n^2/(2r) - n/2
  bool count_bound_ok = false;  // count <= n^2/2 - n^2/(2r) + 1
  bool bounds_ok() const noexcept { return min_bound_ok && count_bound_ok; }
};

DensityReport density_and_bounds(i64 n, i64 r, const SpectrumOptions& options = {});
DensityReport density_and_bounds(const EdgeSpectrum& s);

struct IntervalSpec {
  double c_low = 0.0;
  double c_high = 0.0;
  /// Constant added to the lower endpoint.
  double low_offset = 0.0;
  /// Intersect with [min C(n,r), max C(n,r)] before checking.
  bool clip = false;
};

struct IntervalReport {
  i64 lo = 0, hi = 0;  // integer endpoints actually checked
  bool vacuous = false;
  bool ok = true;
  std::optional<i64> first_gap;
};

/// Checks [n^2/(2r) + c_low n + low_offset, (n^2-n)/2 - c_high n^{3/2}] against C(n,r).
IntervalReport verify_interval(i64 n, i64 r, const IntervalSpec& spec, const SpectrumOptions& options = {});
IntervalReport verify_interval(const EdgeSpectrum& s, const IntervalSpec& spec);

/// C(n - q, r) + C(q,2) is contained in C(n, r+1) for q = floor(n/(r+1)).
bool shift_inclusion_check(i64 n, i64 r, const SpectrumOptions& options = {});

}  // namespace induced
