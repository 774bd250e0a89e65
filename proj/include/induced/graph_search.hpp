#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "induced/arith.hpp"
#include "induced/clique_spectrum.hpp"

namespace induced {

inline constexpr int kMaxLabeledVertices = 7;
inline constexpr int kMaxCanonicalVertices = 8;

/// Labeled graph on n <= 8 vertices. Bit pair_index(n, i, j) is set iff ij is an edge; pairs are
/// ordered lexicographically: (0,1), (0,2), ..., (0,n-1), (1,2), ...
struct GraphMask {
  int n = 0;
  std::uint32_t edges = 0;

  int edge_count() const noexcept;
  bool has_edge(int i, int j) const noexcept;
  std::vector<std::pair<int, int>> edge_list() const;
  friend bool operator==(const GraphMask&, const GraphMask&) = default;
};

int pair_index(int n, int i, int j) noexcept;
/// Mask of the pairs inside a vertex subset.
std::uint32_t subset_pair_mask(int n, std::uint32_t vertices) noexcept;
int induced_edges(const GraphMask& g, std::uint32_t vertices) noexcept;

enum class Enumeration { Labeled, Canonical };

struct SearchOptions {
  Enumeration mode = Enumeration::Labeled;
  unsigned threads = 1;  // 0 = all cores
};

struct ArrowResult {
  bool holds = true;
  std::optional<GraphMask> counterexample;
};

/// Does every n-vertex graph with e edges contain an induced m-vertex subgraph with f edges?
/// Labeled mode supports n <= 7, canonical mode n <= 8; otherwise ScaleRejected.
ArrowResult arrow(int n, i64 e, int m, i64 f, const SearchOptions& options = {});

/// Graph has e edges and no m-subset spans exactly f edges.
bool is_counterexample(const GraphMask& g, i64 e, int m, i64 f);

/// S_n(m,f) from a single pass over all graphs.
EdgeSpectrum compute_snm(int n, int m, i64 f, const SearchOptions& options = {});
/// S_n(m,f) for every f in [0, C(m,2)], indexed by f.
std::vector<EdgeSpectrum> compute_snm_table(int n, int m, const SearchOptions& options = {});

/// Edge count of the complete balanced p-partite graph on n vertices.
i64 turan_number(i64 p, i64 n);

struct TuranReport {
  bool holds = false;
  i64 turan = 0;  // t_{m-1}(n)
  std::vector<i64> members;
};
/// S_n(m, C(m,2)) == {e : t_{m-1}(n) < e <= C(n,2)} for m in {3, 4}.
TuranReport turan_check(int n, int m, const SearchOptions& options = {});

struct RunReport {
  std::vector<std::pair<i64, i64>> runs;  // maximal [start, end] blocks of consecutive members
  i64 members = 0;
  double density = 0.0;  // members / C(n,2)
};
RunReport interval_runs(const EdgeSpectrum& s);
RunReport interval_runs(int n, int m, i64 f, const SearchOptions& options = {});

/// Smallest relabeled mask over all orderings compatible with an equitable vertex colouring.
GraphMask canonical_form(const GraphMask& g);
/// One canonical graph per isomorphism class on n vertices, sorted by mask.
const std::vector<GraphMask>& graph_representatives(int n);

struct ClosureReport {
  bool holds = true;
  bool exhaustive = false;
  i64 graphs = 0;
  i64 subsets = 0;
  // First failure, if any.
  std::vector<int> clique_of_vertex;
  std::uint32_t subset = 0;
  i64 subset_edges = 0;
};

/// Every induced m-subset of a union of at most r cliques on n vertices spans an edge count in C(m, r).
/// Exhaustive over partitions when n <= 10, otherwise `trials` random (labelling, subset) draws.
ClosureReport induced_closure_check(int n, i64 r, int m, i64 trials, u64 seed);

struct TailRow {
  double t = 0;
  double bound = 0;      // 2 exp(-2 t^2 / (min(n, N-n) (n-1)^2))
  double frequency = 0;  // observed P(|X - mean| >= t)
  double std_error = 0;
  bool ok = true;        // frequency <= bound + 3 std_error
};

struct ConcentrationReport {
  i64 N = 0, E = 0, n = 0, trials = 0;
  u64 seed = 0;
  double expected_mean = 0;  // E C(n,2) / C(N,2)
  double mean = 0, stddev = 0, std_error = 0;
  i64 min_sample = 0, max_sample = 0;
  bool mean_within_3se = true;
  bool exact_checked = false;
  bool exact_holds = false;
  double exact_mean = 0;
  std::vector<TailRow> tail;
  bool tail_ok = true;
};

/// Random graph with E edges on N vertices; induced edge counts of uniform n-subsets.
/// The expectation identity is checked by full enumeration whenever C(N,n) <= 10^6.
ConcentrationReport concentration_experiment(i64 N, i64 E, i64 n, i64 trials, u64 seed);

}  // namespace induced
