#include <doctest.h>

#include <bit>
#include <map>
#include <set>

#include "induced/clique_spectrum.hpp"
#include "induced/combinatorics.hpp"
#include "induced/errors.hpp"
#include "induced/graph_search.hpp"
#include "oracles.hpp"

using namespace induced;

namespace {

// Adjacency-matrix enumeration, independent of the pair-mask kernel.
struct NaiveGraph {
  int n;
  bool adj[8][8]{};
};

NaiveGraph from_bits(int n, std::uint32_t bits) {
  NaiveGraph g{n};
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if (bits >> k & 1u) g.adj[i][j] = g.adj[j][i] = true;
  return g;
}

std::set<i64> naive_induced_counts(const NaiveGraph& g, int m) {
  std::set<i64> out;
  for (std::uint32_t s = 0; s < (1u << g.n); ++s) {
    if (std::popcount(s) != m) continue;
    i64 e = 0;
    for (int i = 0; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j)
        if ((s >> i & 1u) && (s >> j & 1u) && g.adj[i][j]) ++e;
    out.insert(e);
  }
  return out;
}

std::set<i64> naive_snm(int n, int m, i64 f) {
  const int pairs = n * (n - 1) / 2;
  std::map<i64, bool> ok;
  for (i64 e = 0; e <= pairs; ++e) ok[e] = true;
  for (std::uint32_t bits = 0; bits < (1u << pairs); ++bits) {
    const auto counts = naive_induced_counts(from_bits(n, bits), m);
    if (!counts.count(f)) ok[std::popcount(bits)] = false;
  }
  std::set<i64> out;
  for (auto [e, v] : ok)
    if (v) out.insert(e);
  return out;
}

std::vector<i64> range(i64 a, i64 b) {
  std::vector<i64> v;
  for (i64 i = a; i <= b; ++i) v.push_back(i);
  return v;
}

}  // namespace

TEST_CASE("pair masks") {
  CHECK(pair_index(4, 0, 1) == 0);
  CHECK(pair_index(4, 0, 3) == 2);
  CHECK(pair_index(4, 1, 2) == 3);
  CHECK(pair_index(4, 2, 3) == 5);
  CHECK(subset_pair_mask(4, 0b0111) == 0b001011u);
  const GraphMask k4{4, 0b111111};
  CHECK(k4.edge_count() == 6);
  CHECK(induced_edges(k4, 0b1011) == 3);
  CHECK(GraphMask{3, 0b100}.edge_list() == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("arrow examples") {
  CHECK(arrow(3, 1, 2, 1).holds);

  const auto empty = arrow(3, 0, 2, 1);
  CHECK_FALSE(empty.holds);
  REQUIRE(empty.counterexample);
  CHECK(empty.counterexample->edges == 0u);

  const auto tri = arrow(5, 6, 3, 3);
  CHECK_FALSE(tri.holds);
  REQUIRE(tri.counterexample);
  const auto& g = *tri.counterexample;
  CHECK(g.edge_count() == 6);
  CHECK(is_counterexample(g, 6, 3, 3));
  // Triangle-free with 6 edges on 5 vertices: the degree multiset of K_{2,3}.
  std::multiset<int> degrees;
  for (int v = 0; v < 5; ++v) {
    int d = 0;
    for (int u = 0; u < 5; ++u)
      if (u != v && g.has_edge(u, v)) ++d;
    degrees.insert(d);
  }
  CHECK(degrees == std::multiset<int>{2, 2, 2, 3, 3});

  CHECK_THROWS_AS(arrow(8, 3, 3, 1), ScaleRejected);
  CHECK_THROWS_AS(arrow(9, 3, 3, 1, {Enumeration::Canonical, 1}), ScaleRejected);
}

TEST_CASE("counterexamples re-validate") {
  for (int n = 2; n <= 6; ++n)
    for (int m = 2; m <= n; ++m)
      for (i64 f = 0; f <= choose2(m); ++f)
        for (i64 e = 0; e <= choose2(n); ++e) {
          const auto a = arrow(n, e, m, f);
          REQUIRE(a.holds == !a.counterexample.has_value());
          if (a.counterexample) {
            REQUIRE(a.counterexample->edge_count() == e);
            REQUIRE_FALSE(naive_induced_counts(from_bits(n, a.counterexample->edges), m).count(f));
          }
        }
}

TEST_CASE("compute_snm examples") {
  CHECK(compute_snm(3, 2, 1).members() == std::vector<i64>{1, 2, 3});
  CHECK(compute_snm(4, 2, 0).members() == range(0, 5));
  CHECK(compute_snm(5, 3, 3).members() == range(7, 10));
}

TEST_CASE("compute_snm matches adjacency-matrix enumeration") {
  for (int n = 2; n <= 5; ++n)
    for (int m = 2; m <= n; ++m) {
      const auto table = compute_snm_table(n, m);
      for (i64 f = 0; f <= choose2(m); ++f) {
        const auto expected = naive_snm(n, m, f);
        REQUIRE(table[static_cast<std::size_t>(f)].members() == std::vector<i64>(expected.begin(), expected.end()));
      }
    }
}

TEST_CASE("labeled and canonical enumeration agree") {
  for (int n = 2; n <= 6; ++n)
    for (int m = 2; m <= n; ++m) {
      const auto a = compute_snm_table(n, m, {Enumeration::Labeled, 1});
      const auto b = compute_snm_table(n, m, {Enumeration::Canonical, 1});
      const auto c = compute_snm_table(n, m, {Enumeration::Labeled, 3});
      REQUIRE(a == b);
      REQUIRE(a == c);
      for (i64 f = 0; f <= choose2(m); ++f)
        for (i64 e = 0; e <= choose2(n); ++e)
          REQUIRE(arrow(n, e, m, f, {Enumeration::Canonical, 1}).holds == a[static_cast<std::size_t>(f)].contains(e));
    }
}

TEST_CASE("graph representatives") {
  const std::vector<std::size_t> counts{1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) CHECK(graph_representatives(n).size() == counts[static_cast<std::size_t>(n - 1)]);
  for (int n = 1; n <= 5; ++n) {
    std::set<std::uint32_t> classes;
    for (std::uint32_t bits = 0; bits < (1u << (n * (n - 1) / 2)); ++bits) classes.insert(canonical_form({n, bits}).edges);
    CHECK(classes.size() == counts[static_cast<std::size_t>(n - 1)]);
  }
}

TEST_CASE("turan") {
  CHECK(turan_number(2, 5) == 6);
  CHECK(turan_number(2, 6) == 9);
  CHECK(turan_number(3, 7) == 16);
  CHECK(turan_check(5, 3).holds);
  const auto t6 = turan_check(6, 3);
  CHECK(t6.holds);
  CHECK(t6.turan == 9);
  const auto t7 = turan_check(7, 4);
  CHECK(t7.holds);
  CHECK(t7.turan == 16);
  CHECK(t7.members == range(17, 21));
}

TEST_CASE("interval runs") {
  const auto r = interval_runs(3, 2, 1);
  CHECK(r.runs == std::vector<std::pair<i64, i64>>{{1, 3}});
  CHECK(r.members == 3);
  CHECK(interval_runs(4, 2, 0).runs == std::vector<std::pair<i64, i64>>{{0, 5}});
  const auto none = interval_runs(6, 5, 4);
  CHECK(none.runs.empty());
  CHECK(none.members == 0);
  CHECK(interval_runs(EdgeSpectrum(3, std::nullopt, [] {
          BitVector b(4);
          b.set(0);
          b.set(2);
          b.set(3);
          return b;
        }()))
            .runs == std::vector<std::pair<i64, i64>>{{0, 0}, {2, 3}});
}

TEST_CASE("complement symmetry") {
  for (int n = 2; n <= 6; ++n)
    for (int m = 2; m <= std::min(n, 4); ++m) {
      const auto table = compute_snm_table(n, m);
      for (i64 f = 0; f <= choose2(m); ++f)
        for (i64 e = 0; e <= choose2(n); ++e)
          REQUIRE(table[static_cast<std::size_t>(f)].contains(e) ==
                  table[static_cast<std::size_t>(choose2(m) - f)].contains(choose2(n) - e));
    }
}

TEST_CASE("special pairs: pinned S_n sets") {
  const std::map<std::tuple<int, int, i64>, std::vector<i64>> pinned{
      {{7, 2, 0}, range(0, 20)}, {{7, 2, 1}, range(1, 21)},  {{4, 4, 3}, {3}},          {{5, 4, 3}, {5}},
      {{6, 4, 3}, range(6, 9)},  {{7, 4, 3}, range(7, 14)},  {{5, 5, 4}, {4}},          {{6, 5, 4}, {}},
      {{7, 5, 4}, {8}},          {{5, 5, 6}, {6}},           {{6, 5, 6}, {}},           {{7, 5, 6}, {13}},
  };
  for (const auto& [key, members] : pinned) {
    const auto [n, m, f] = key;
    CHECK_MESSAGE(compute_snm(n, m, f).members() == members, n << "," << m << "," << f);
  }
}

TEST_CASE("induced closure") {
  const auto a = induced_closure_check(10, 3, 5, 0, 1);
  CHECK(a.holds);
  CHECK(a.exhaustive);
  CHECK(a.subsets > 0);
  CHECK(induced_closure_check(6, 1, 3, 0, 1).holds);
  const auto b = induced_closure_check(12, 4, 6, 10000, 42);
  CHECK(b.holds);
  CHECK_FALSE(b.exhaustive);
  CHECK(b.subsets == 10000);
}

TEST_CASE("concentration") {
  const auto small = concentration_experiment(6, 5, 3, 1000, 3);
  CHECK(small.exact_checked);
  CHECK(small.exact_holds);
  CHECK(small.exact_mean == doctest::Approx(1.0));
  CHECK(small.expected_mean == doctest::Approx(1.0));

  const auto zero = concentration_experiment(40, 0, 10, 500, 3);
  CHECK(zero.max_sample == 0);
  CHECK(zero.min_sample == 0);
  CHECK(zero.mean == 0.0);

  const auto big = concentration_experiment(200, 5000, 30, 100000, 11);
  CHECK(big.expected_mean == doctest::Approx(5000.0 * 435 / 19900));
  CHECK(big.mean_within_3se);
  CHECK(big.tail_ok);
  CHECK_FALSE(big.exact_checked);

  CHECK_THROWS_AS(concentration_experiment(5, 11, 3, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(concentration_experiment(5, 3, 6, 10, 1), std::invalid_argument);
}

TEST_CASE("concentration is reproducible for a seed") {
  const auto a = concentration_experiment(100, 1000, 20, 2000, 99);
  const auto b = concentration_experiment(100, 1000, 20, 2000, 99);
  CHECK(a.mean == b.mean);
  CHECK(a.stddev == b.stddev);
}
