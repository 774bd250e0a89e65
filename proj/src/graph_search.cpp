#include "induced/graph_search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "induced/errors.hpp"
#include "induced/parallel.hpp"

namespace induced {

int pair_index(int n, int i, int j) noexcept {
  if (i > j) std::swap(i, j);
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

int GraphMask::edge_count() const noexcept { return std::popcount(edges); }

bool GraphMask::has_edge(int i, int j) const noexcept {
  return i != j && ((edges >> pair_index(n, i, j)) & 1u);
}

std::vector<std::pair<int, int>> GraphMask::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

std::uint32_t subset_pair_mask(int n, std::uint32_t vertices) noexcept {
  std::uint32_t mask = 0;
  for (int i = 0; i < n; ++i) {
    if (!((vertices >> i) & 1u)) continue;
    for (int j = i + 1; j < n; ++j)
      if ((vertices >> j) & 1u) mask |= std::uint32_t{1} << pair_index(n, i, j);
  }
  return mask;
}

int induced_edges(const GraphMask& g, std::uint32_t vertices) noexcept {
  return std::popcount(g.edges & subset_pair_mask(g.n, vertices));
}

namespace {

std::uint32_t next_combination(std::uint32_t x) noexcept {
  const std::uint32_t c = x & -x;
  const std::uint32_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

std::vector<std::uint32_t> subset_masks(int n, int m) {
  std::vector<std::uint32_t> out;
  if (m == 0) return {0};
  for (std::uint32_t s = (1u << m) - 1; s < (1u << n); s = next_combination(s)) out.push_back(subset_pair_mask(n, s));
  return out;
}

void check_scale(int n, int m, const SearchOptions& options) {
  const int limit = options.mode == Enumeration::Labeled ? kMaxLabeledVertices : kMaxCanonicalVertices;
  if (n < 1 || n > limit)
    throw ScaleRejected("n=" + std::to_string(n) + " outside the supported range [1, " + std::to_string(limit) + "]");
  if (m < 2 || m > n) throw std::invalid_argument("m must satisfy 2 <= m <= n");
}

int pairs_of(int n) { return n * (n - 1) / 2; }

// Bit f of the result is set iff some m-subset spans exactly f edges.
std::uint32_t achievable(std::uint32_t edges, const std::vector<std::uint32_t>& subsets) noexcept {
  std::uint32_t ach = 0;
  for (auto s : subsets) ach |= std::uint32_t{1} << std::popcount(edges & s);
  return ach;
}

}  // namespace

bool is_counterexample(const GraphMask& g, i64 e, int m, i64 f) {
  if (g.edge_count() != e) return false;
  for (auto s : subset_masks(g.n, m))
    if (std::popcount(g.edges & s) == f) return false;
  return true;
}

ArrowResult arrow(int n, i64 e, int m, i64 f, const SearchOptions& options) {
  check_scale(n, m, options);
  const int P = pairs_of(n);
  if (e < 0 || e > P) throw std::invalid_argument("arrow: e must lie in [0, C(n,2)]");
  if (f < 0 || f > pairs_of(m)) throw std::invalid_argument("arrow: f must lie in [0, C(m,2)]");
  const auto subsets = subset_masks(n, m);
  const std::uint32_t want = std::uint32_t{1} << f;

  if (options.mode == Enumeration::Canonical) {
    for (const auto& g : graph_representatives(n)) {
      if (g.edge_count() != e) continue;
      if (!(achievable(g.edges, subsets) & want)) return {false, g};
    }
    return {true, std::nullopt};
  }

  if (e == 0) {
    if (!(achievable(0, subsets) & want)) return {false, GraphMask{n, 0}};
    return {true, std::nullopt};
  }
  const std::uint64_t end = std::uint64_t{1} << P;
  for (std::uint64_t x = (std::uint64_t{1} << e) - 1; x < end;) {
    const auto edges = static_cast<std::uint32_t>(x);
    if (!(achievable(edges, subsets) & want)) return {false, GraphMask{n, edges}};
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return {true, std::nullopt};
}

std::vector<EdgeSpectrum> compute_snm_table(int n, int m, const SearchOptions& options) {
  check_scale(n, m, options);
  const int P = pairs_of(n);
  const auto subsets = subset_masks(n, m);
  // meet[e] = AND of achievable sets over all graphs with e edges.
  std::vector<std::uint32_t> meet(static_cast<std::size_t>(P) + 1, ~std::uint32_t{0});

  if (options.mode == Enumeration::Canonical) {
    for (const auto& g : graph_representatives(n)) meet[static_cast<std::size_t>(g.edge_count())] &= achievable(g.edges, subsets);
  } else {
    const std::uint64_t total = std::uint64_t{1} << P;
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(options.threads), total));
    std::vector<std::vector<std::uint32_t>> local(workers, meet);
    run_workers(workers, [&](unsigned w, unsigned count) {
      const std::uint64_t lo = total * w / count, hi = total * (w + 1) / count;
      auto& acc = local[w];
      for (std::uint64_t x = lo; x < hi; ++x) {
        const auto edges = static_cast<std::uint32_t>(x);
        acc[static_cast<std::size_t>(std::popcount(edges))] &= achievable(edges, subsets);
      }
    });
    for (const auto& acc : local)
      for (std::size_t e = 0; e < meet.size(); ++e) meet[e] &= acc[e];
  }

  std::vector<EdgeSpectrum> out;
  for (int f = 0; f <= pairs_of(m); ++f) {
    BitVector bits(static_cast<std::size_t>(P) + 1);
    for (int e = 0; e <= P; ++e)
      if ((meet[static_cast<std::size_t>(e)] >> f) & 1u) bits.set(static_cast<std::size_t>(e));
    out.emplace_back(n, std::nullopt, std::move(bits));
  }
  return out;
}

EdgeSpectrum compute_snm(int n, int m, i64 f, const SearchOptions& options) {
  check_scale(n, m, options);
  if (f < 0 || f > pairs_of(m)) throw std::invalid_argument("compute_snm: f must lie in [0, C(m,2)]");
  auto table = compute_snm_table(n, m, options);
  return std::move(table[static_cast<std::size_t>(f)]);
}

i64 turan_number(i64 p, i64 n) {
  if (p < 1 || n < 0) throw std::invalid_argument("turan_number: need p >= 1, n >= 0");
  const i64 q = n / p, rem = n % p;
  return choose2(n) - rem * choose2(q + 1) - (p - rem) * choose2(q);
}

TuranReport turan_check(int n, int m, const SearchOptions& options) {
  if (m != 3 && m != 4) throw std::invalid_argument("turan_check: m must be 3 or 4");
  TuranReport rep;
  rep.turan = turan_number(m - 1, n);
  const EdgeSpectrum s = compute_snm(n, m, pairs_of(m), options);
  rep.members = s.members();
  std::vector<i64> expected;
  for (i64 e = rep.turan + 1; e <= choose2(n); ++e) expected.push_back(e);
  rep.holds = rep.members == expected;
  return rep;
}

RunReport interval_runs(const EdgeSpectrum& s) {
  RunReport rep;
  for (i64 e : s.members()) {
    if (!rep.runs.empty() && rep.runs.back().second + 1 == e)
      rep.runs.back().second = e;
    else
      rep.runs.emplace_back(e, e);
    ++rep.members;
  }
  rep.density = s.universe() > 0 ? static_cast<double>(rep.members) / static_cast<double>(s.universe()) : 0.0;
  return rep;
}

RunReport interval_runs(int n, int m, i64 f, const SearchOptions& options) {
  return interval_runs(compute_snm(n, m, f, options));
}

namespace {

using Adjacency = std::array<std::uint8_t, kMaxCanonicalVertices>;

Adjacency to_adjacency(const GraphMask& g) {
  Adjacency adj{};
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.has_edge(i, j)) {
        adj[i] |= static_cast<std::uint8_t>(1u << j);
        adj[j] |= static_cast<std::uint8_t>(1u << i);
      }
  return adj;
}

// Iterated degree refinement; colours are ranks of (colour, sorted neighbour colours) signatures.
std::vector<int> equitable_colours(int n, const Adjacency& adj) {
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  int classes = 1;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (int u = 0; u < n; ++u)
        if ((adj[v] >> u) & 1u) sig[v].second.push_back(colour[u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::map<std::pair<int, std::vector<int>>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [key, value] : rank) value = next++;
    for (int v = 0; v < n; ++v) colour[v] = rank[sig[v]];
    if (next == classes) break;
    classes = next;
  }
  return colour;
}

}  // namespace

GraphMask canonical_form(const GraphMask& g) {
  if (g.n < 0 || g.n > kMaxCanonicalVertices) throw ScaleRejected("canonical_form: n out of range");
  const int n = g.n;
  const Adjacency adj = to_adjacency(g);
  const auto colour = equitable_colours(n, adj);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return colour[a] != colour[b] ? colour[a] < colour[b] : a < b; });
  std::vector<std::pair<int, int>> cells;  // [begin, end) in `order`
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }

  std::uint32_t best = ~std::uint32_t{0};
  // Position p of the relabelled graph holds original vertex order[p]; permute within each cell.
  auto evaluate = [&] {
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((adj[order[i]] >> order[j]) & 1u) mask |= std::uint32_t{1} << pair_index(n, i, j);
    best = std::min(best, mask);
  };
  auto recurse = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      evaluate();
      return;
    }
    auto first = order.begin() + cells[cell].first, last = order.begin() + cells[cell].second;
    std::sort(first, last);
    do {
      self(self, cell + 1);
    } while (std::next_permutation(first, last));
  };
  recurse(recurse, 0);
  return GraphMask{n, n <= 1 ? 0u : best};
}

const std::vector<GraphMask>& graph_representatives(int n) {
  if (n < 1 || n > kMaxCanonicalVertices) throw ScaleRejected("graph_representatives: n out of range");
  static std::mutex mutex;
  static std::array<std::vector<GraphMask>, kMaxCanonicalVertices + 1> cache;
  std::lock_guard lock(mutex);
  if (cache[1].empty()) cache[1] = {GraphMask{1, 0}};
  for (int k = 2; k <= n; ++k) {
    if (!cache[k].empty()) continue;
    std::set<std::uint32_t> seen;
    for (const auto& g : cache[k - 1]) {
      // Re-index the k-1 vertex graph into k-vertex pair order, then attach vertex k-1.
      std::uint32_t base = 0;
      for (auto [i, j] : g.edge_list()) base |= std::uint32_t{1} << pair_index(k, i, j);
      for (std::uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
        std::uint32_t mask = base;
        for (int i = 0; i < k - 1; ++i)
          if ((nb >> i) & 1u) mask |= std::uint32_t{1} << pair_index(k, i, k - 1);
        seen.insert(canonical_form(GraphMask{k, mask}).edges);
      }
    }
    for (auto mask : seen) cache[k].push_back(GraphMask{k, mask});
  }
  return cache[n];
}

namespace {

void partitions_into(int n, int max_parts, int max_part, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  if (max_parts == 0) return;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_into(n - p, max_parts - 1, p, cur, out);
    cur.pop_back();
  }
}

i64 subset_edges(const std::vector<std::uint16_t>& adj, std::uint32_t subset) {
  i64 twice = 0;
  for (std::uint32_t s = subset; s; s &= s - 1) twice += std::popcount(adj[static_cast<std::size_t>(std::countr_zero(s))] & subset);
  return twice / 2;
}

std::vector<std::uint16_t> clique_union(const std::vector<int>& label) {
  std::vector<std::uint16_t> adj(label.size(), 0);
  for (std::size_t i = 0; i < label.size(); ++i)
    for (std::size_t j = 0; j < label.size(); ++j)
      if (i != j && label[i] == label[j]) adj[i] |= static_cast<std::uint16_t>(1u << j);
  return adj;
}

}  // namespace

ClosureReport induced_closure_check(int n, i64 r, int m, i64 trials, u64 seed) {
  if (n < 1 || n > 12) throw ScaleRejected("induced_closure_check: n must lie in [1, 12]");
  if (m < 1 || m > n) throw std::invalid_argument("induced_closure_check: m must lie in [1, n]");
  if (r < 1) throw std::invalid_argument("induced_closure_check: r must be at least 1");
  const EdgeSpectrum oracle = spectrum(m, r);
  ClosureReport rep;

  auto check = [&](const std::vector<int>& label, std::uint32_t subset) {
    const auto adj = clique_union(label);
    const i64 edges = subset_edges(adj, subset);
    ++rep.subsets;
    if (!oracle.contains(edges) && rep.holds) {
      rep.holds = false;
      rep.clique_of_vertex = label;
      rep.subset = subset;
      rep.subset_edges = edges;
    }
  };

  if (n <= 10) {
    rep.exhaustive = true;
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_into(n, static_cast<int>(std::min<i64>(r, n)), n, cur, parts);
    for (const auto& p : parts) {
      std::vector<int> label;
      for (std::size_t c = 0; c < p.size(); ++c) label.insert(label.end(), static_cast<std::size_t>(p[c]), static_cast<int>(c));
      ++rep.graphs;
      for (std::uint32_t s = (1u << m) - 1; s < (1u << n); s = next_combination(s)) check(label, s);
    }
    return rep;
  }

  if (trials < 1) throw std::invalid_argument("induced_closure_check: n > 10 needs a positive trial count");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(std::min<i64>(r, n)) - 1);
  std::vector<int> verts(static_cast<std::size_t>(n));
  for (i64 t = 0; t < trials; ++t) {
    std::vector<int> label(static_cast<std::size_t>(n));
    for (auto& l : label) l = pick(rng);
    std::iota(verts.begin(), verts.end(), 0);
    std::uint32_t subset = 0;
    for (int i = 0; i < m; ++i) {
      std::uniform_int_distribution<int> d(i, n - 1);
      std::swap(verts[i], verts[d(rng)]);
      subset |= 1u << verts[i];
    }
    ++rep.graphs;
    check(label, subset);
  }
  return rep;
}

namespace {

class DenseGraph {
 public:
  explicit DenseGraph(i64 n) : n_(n), words_((n + 63) / 64), rows_(static_cast<std::size_t>(n * words_), 0) {}
  void add(i64 i, i64 j) {
    set(i, j);
    set(j, i);
  }
  bool has(i64 i, i64 j) const { return (rows_[static_cast<std::size_t>(i * words_ + j / 64)] >> (j % 64)) & 1u; }

 private:
  void set(i64 i, i64 j) { rows_[static_cast<std::size_t>(i * words_ + j / 64)] |= u64{1} << (j % 64); }
  i64 n_;
  i64 words_;
  std::vector<u64> rows_;
};

i64 induced_count(const DenseGraph& g, const std::vector<i64>& verts, std::size_t n) {
  i64 e = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e += g.has(verts[i], verts[j]);
  return e;
}

// Binomial coefficient, saturating at `cap` + 1.
u64 binomial_capped(i64 N, i64 n, u64 cap) {
  n = std::min(n, N - n);
  u128 c = 1;
  for (i64 i = 1; i <= n; ++i) {
    c = c * static_cast<u128>(N - n + i) / static_cast<u128>(i);
    if (c > cap) return cap + 1;
  }
  return static_cast<u64>(c);
}

}  // namespace

ConcentrationReport concentration_experiment(i64 N, i64 E, i64 n, i64 trials, u64 seed) {
  if (n < 2 || n > N) throw std::invalid_argument("concentration_experiment: need 2 <= n <= N");
  if (E < 0 || E > choose2(N)) throw std::invalid_argument("concentration_experiment: E must lie in [0, C(N,2)]");
  if (trials < 0) throw std::invalid_argument("concentration_experiment: trials must be non-negative");
  if (choose2(N) > 10'000'000) throw ResourceLimitExceeded("concentration_experiment: N too large");

  ConcentrationReport rep;
  rep.N = N;
  rep.E = E;
  rep.n = n;
  rep.trials = trials;
  rep.seed = seed;
  rep.expected_mean = static_cast<double>(E) * static_cast<double>(choose2(n)) / static_cast<double>(choose2(N));

  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
  pairs.reserve(static_cast<std::size_t>(choose2(N)));
  for (i64 i = 0; i < N; ++i)
    for (i64 j = i + 1; j < N; ++j) pairs.emplace_back(static_cast<std::int32_t>(i), static_cast<std::int32_t>(j));
  DenseGraph g(N);
  for (i64 k = 0; k < E; ++k) {
    std::uniform_int_distribution<std::size_t> d(static_cast<std::size_t>(k), pairs.size() - 1);
    std::swap(pairs[static_cast<std::size_t>(k)], pairs[d(rng)]);
    g.add(pairs[static_cast<std::size_t>(k)].first, pairs[static_cast<std::size_t>(k)].second);
  }

  const u64 subsets = binomial_capped(N, n, 1'000'000);
  if (subsets <= 1'000'000) {
    rep.exact_checked = true;
    std::vector<i64> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    u128 sum = 0;
    while (true) {
      sum += static_cast<u128>(induced_count(g, idx, idx.size()));
      i64 i = n - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == N - n + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (i64 j = i + 1; j < n; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    // sum / C(N,n) == E C(n,2) / C(N,2)
    rep.exact_holds = sum * static_cast<u128>(choose2(N)) ==
                      static_cast<u128>(E) * static_cast<u128>(choose2(n)) * static_cast<u128>(subsets);
    rep.exact_mean = static_cast<double>(sum) / static_cast<double>(subsets);
  }

  if (trials == 0) return rep;
  std::vector<i64> samples(static_cast<std::size_t>(trials));
  std::vector<i64> verts(static_cast<std::size_t>(N));
  for (auto& s : samples) {
    std::iota(verts.begin(), verts.end(), 0);
    for (i64 i = 0; i < n; ++i) {
      std::uniform_int_distribution<i64> d(i, N - 1);
      std::swap(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(d(rng))]);
    }
    s = induced_count(g, verts, static_cast<std::size_t>(n));
  }
  double sum = 0, sq = 0;
  for (i64 s : samples) {
    sum += static_cast<double>(s);
    sq += static_cast<double>(s) * static_cast<double>(s);
  }
  const double T = static_cast<double>(trials);
  rep.mean = sum / T;
  rep.stddev = trials > 1 ? std::sqrt(std::max(0.0, (sq - T * rep.mean * rep.mean) / (T - 1))) : 0.0;
  rep.std_error = rep.stddev / std::sqrt(T);
  rep.min_sample = *std::min_element(samples.begin(), samples.end());
  rep.max_sample = *std::max_element(samples.begin(), samples.end());
  rep.mean_within_3se = std::abs(rep.mean - rep.expected_mean) <= 3 * rep.std_error + 1e-12;

  // Deviations are measured from the exact expectation; t sweeps 1/8 .. 2 of the natural scale.
  const double alpha = static_cast<double>(n - 1);
  const double spread = static_cast<double>(std::min(n, N - n));
  const double scale = alpha * std::sqrt(spread);
  for (int j = 1; j <= 16; ++j) {
    TailRow row;
    row.t = scale * j / 8.0;
    row.bound = spread > 0 ? std::min(1.0, 2 * std::exp(-2 * row.t * row.t / (spread * alpha * alpha))) : 0.0;
    i64 hits = 0;
    for (i64 s : samples) hits += std::abs(static_cast<double>(s) - rep.expected_mean) >= row.t;
    row.frequency = static_cast<double>(hits) / T;
    row.std_error = std::sqrt(row.frequency * (1 - row.frequency) / T);
    row.ok = row.frequency <= row.bound + 3 * row.std_error;
    rep.tail_ok = rep.tail_ok && row.ok;
    rep.tail.push_back(row);
  }
  return rep;
}

}  // namespace induced
