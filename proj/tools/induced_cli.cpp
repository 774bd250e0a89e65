// induced: command-line front end for the clique-spectrum, graph-search and number-theory checks.
//
// stdout carries results (one JSON object, JSON lines for campaigns, or CSV with --csv).
// stderr carries diagnostics and the run manifest. Exit codes: 0 ok, 1 verification failure, 2 usage error.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "induced/clique_spectrum.hpp"
#include "induced/combinatorics.hpp"
#include "induced/errors.hpp"
#include "induced/graph_search.hpp"
#include "induced/pell.hpp"
#include "induced/rep_count.hpp"
#include "induced/squares.hpp"

using namespace induced;
using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Globals {
  bool check = false;
  bool csv = false;
  unsigned threads = 0;
  u64 seed = 1;
  std::string manifest_path;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// What a subcommand produced. `lines` switches output to JSON lines.
struct Output {
  Json doc;
  std::vector<Json> lines;
  std::optional<Table> table;
  bool verified = true;
  std::string failure;
};

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_check(bool cond, const std::string& what) {
  if (!cond) throw VerificationFailed("check failed: " + what);
}

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

Json rational(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json optional_rational(const std::optional<Rational>& r) { return r ? rational(*r) : Json(nullptr); }

template <class T>
Json optional_value(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

SpectrumOptions spectrum_options() {
  SpectrumOptions o;
  if (const char* cap = std::getenv("INDUCED_MEMORY_CAP_MB")) {
    char* end = nullptr;
    const unsigned long long mb = std::strtoull(cap, &end, 10);
    if (end == cap || *end != '\0' || mb == 0) throw CLI::ValidationError("INDUCED_MEMORY_CAP_MB", "expected a positive integer");
    o.memory_cap_bytes = static_cast<std::size_t>(mb) << 20;
  }
  return o;
}

std::string csv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

// Scalar top-level fields as one header row and one value row.
Table scalar_table(const Json& doc) {
  Table t;
  std::vector<std::string> row;
  for (const auto& [k, v] : doc.items()) {
    if (v.is_structured()) continue;
    t.header.push_back(k);
    row.push_back(csv_cell(v));
  }
  t.rows.push_back(std::move(row));
  return t;
}

std::string render_csv(const Table& t) {
  auto join = [](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += ',';
      s += cells[i];
    }
    return s + '\n';
  };
  std::string out = join(t.header);
  for (const auto& r : t.rows) out += join(r);
  return out;
}

Json partition_json(const std::optional<CliquePartition>& p) {
  if (!p) return nullptr;
  return p->parts;
}

Json verdict_json(i64 m, i64 f, const Verdict& v) {
  Json trace = Json::array();
  for (const auto& e : v.trace) {
    Json params = Json::object();
    for (const auto& [k, val] : e.params) params[k] = val;
    trace.push_back({{"rule", e.rule}, {"kind", e.kind}, {"params", params}, {"effect", e.effect}});
  }
  return {{"m", m},
          {"f", f},
          {"exact", optional_rational(v.exact)},
          {"upper", rational(v.upper)},
          {"cited_upper", rational(v.cited_upper)},
          {"lower", optional_rational(v.lower)},
          {"trace", trace}};
}

Json family_json(const FamilyPair& p, const AbcReport& r) {
  return {{"k", p.k},
          {"t", big(p.t)},
          {"m", big(p.m)},
          {"f", big(p.f)},
          {"a", big(p.a)},
          {"b", big(p.b)},
          {"c", big(p.c)},
          {"ABC",
           {{"A", r.a_holds},
            {"B", r.b_holds},
            {"B_parts", {big(r.b_parts[0]), big(r.b_parts[1]), big(r.b_parts[2])}},
            {"C", to_string(r.c.status)},
            {"C_iterations", big(r.c.iterations)}}}};
}

Json witness7_json(const Witness7& w, bool verified) {
  return {{"n", w.n},
          {"m", w.m},
          {"t", w.t},
          {"s", w.s},
          {"parts", w.parts},
          {"t0", w.t0},
          {"t_prime", w.t_prime},
          {"window_offset", w.window_offset},
          {"verified", verified}};
}

Json concentration_json(const ConcentrationReport& r) {
  Json tail = Json::array();
  for (const auto& row : r.tail)
    tail.push_back({{"t", row.t}, {"bound", row.bound}, {"frequency", row.frequency}, {"std_error", row.std_error}, {"ok", row.ok}});
  return {{"N", r.N},
          {"E", r.E},
          {"n", r.n},
          {"trials", r.trials},
          {"seed", r.seed},
          {"expected_mean", r.expected_mean},
          {"mean", r.mean},
          {"stddev", r.stddev},
          {"std_error", r.std_error},
          {"min_sample", r.min_sample},
          {"max_sample", r.max_sample},
          {"mean_within_3se", r.mean_within_3se},
          {"exact_checked", r.exact_checked},
          {"exact_holds", r.exact_holds},
          {"exact_mean", r.exact_checked ? Json(r.exact_mean) : Json(nullptr)},
          {"tail_ok", r.tail_ok},
          {"tail", tail}};
}

SearchOptions search_options(const Globals& g, bool canonical) {
  return {canonical ? Enumeration::Canonical : Enumeration::Labeled, g.threads};
}

Table members_table(const std::vector<i64>& members, const char* column) {
  Table t{{column}, {}};
  for (i64 e : members) t.rows.push_back({std::to_string(e)});
  return t;
}

using Handler = std::function<Output()>;

struct Registry {
  CLI::App& app;
  Globals& g;
  std::vector<std::pair<CLI::App*, Handler>> handlers;

  CLI::App* add(const std::string& name, const std::string& description, Handler h) {
    auto* sub = app.add_subcommand(name, description);
    handlers.emplace_back(sub, std::move(h));
    return sub;
  }
};

void register_spectrum(Registry& reg) {
  auto& g = reg.g;

  struct SpectrumArgs {
    i64 n = 0, r = 0, m = 0;
    bool exported = false;
    double c_low = 0, c_high = 0, low_offset = 0;
    bool clip = false;
  };
  auto a = std::make_shared<SpectrumArgs>();

  auto* spectrum_cmd = reg.add("spectrum", "Edge counts of unions of at most r cliques on n vertices", [a, &g]() {
    const auto opts = spectrum_options();
    Output out;
    std::optional<EdgeSpectrum> s;
    if (g.check) {
      SpectrumTable table(a->n, a->r, opts);
      for (i64 e : table.spectrum().members()) {
        const auto w = table.witness(e);
        require_check(w && w->valid() && w->edge_sum() == e && static_cast<i64>(w->parts.size()) <= a->r,
                      "witness for member " + std::to_string(e));
      }
      s = table.spectrum();
    } else {
      s = spectrum(a->n, a->r, opts);
    }
    const auto members = s->members();
    Json header{{"n", a->n}, {"r", a->r}, {"count", s->count()}, {"min", optional_value(s->min())}, {"max", optional_value(s->max())}};
    if (a->exported) {
      out.lines.push_back(header);
      for (i64 e : members) out.lines.push_back(e);
    } else {
      out.doc = header;
      out.doc["members"] = members;
    }
    out.table = members_table(members, "edges");
    return out;
  });
  spectrum_cmd->add_option("--n", a->n, "vertex count")->required()->check(CLI::NonNegativeNumber);
  spectrum_cmd->add_option("--r", a->r, "maximum number of cliques")->required()->check(CLI::PositiveNumber);
  spectrum_cmd->add_flag("--export", a->exported, "JSON header line followed by one member per line");

  auto* witness_cmd = reg.add("witness", "Clique sizes realising a given edge count", [a, &g]() {
    const auto w = member_witness(a->n, a->r, a->m, spectrum_options());
    if (g.check && w)
      require_check(w->valid() && w->edge_sum() == a->m && static_cast<i64>(w->parts.size()) <= a->r, "witness re-validation");
    Output out;
    out.doc = {{"n", a->n}, {"r", a->r}, {"m", a->m}, {"member", w.has_value()}, {"parts", partition_json(w)}};
    return out;
  });
  witness_cmd->add_option("--n", a->n, "vertex count")->required()->check(CLI::NonNegativeNumber);
  witness_cmd->add_option("--r", a->r, "maximum number of cliques")->required()->check(CLI::PositiveNumber);
  witness_cmd->add_option("--m", a->m, "edge count")->required();

  auto* density_cmd = reg.add("density", "Size and density of the clique spectrum with bound checks", [a]() {
    const auto d = density_and_bounds(a->n, a->r, spectrum_options());
    Output out;
    out.doc = {{"n", d.n},
               {"r", d.r},
               {"count", d.count},
               {"density", d.density},
               {"min_element", d.min_element},
               {"min_bound_ok", d.min_bound_ok},
               {"count_bound_ok", d.count_bound_ok}};
    out.verified = d.bounds_ok();
    out.failure = "spectrum bounds violated";
    return out;
  });
  density_cmd->add_option("--n", a->n, "vertex count")->required()->check(CLI::PositiveNumber);
  density_cmd->add_option("--r", a->r, "maximum number of cliques")->required()->check(CLI::PositiveNumber);

  auto* interval_cmd = reg.add("interval", "Check that an integer interval lies inside the clique spectrum", [a, &g]() {
    const IntervalSpec spec{a->c_low, a->c_high, a->low_offset, a->clip};
    const auto s = spectrum(a->n, a->r, spectrum_options());
    const auto r = verify_interval(s, spec);
    if (g.check && !r.vacuous) {
      std::optional<i64> gap;
      for (i64 e = r.lo; e <= r.hi && !gap; ++e)
        if (!s.contains(e)) gap = e;
      require_check(gap == r.first_gap, "first gap recount");
    }
    Output out;
    out.doc = {{"n", a->n},         {"r", a->r},   {"c_low", a->c_low},         {"c_high", a->c_high},
               {"low_offset", a->low_offset}, {"clip", a->clip}, {"lo", r.lo}, {"hi", r.hi},
               {"vacuous", r.vacuous}, {"ok", r.ok}, {"first_gap", optional_value(r.first_gap)}};
    out.verified = r.ok;
    out.failure = "interval has a gap";
    return out;
  });
  interval_cmd->add_option("--n", a->n, "vertex count")->required()->check(CLI::PositiveNumber);
  interval_cmd->add_option("--r", a->r, "maximum number of cliques")->required()->check(CLI::PositiveNumber);
  interval_cmd->add_option("--c-low", a->c_low, "coefficient of n in the lower endpoint")->capture_default_str();
  interval_cmd->add_option("--c-high", a->c_high, "coefficient of n^{3/2} subtracted from the upper endpoint")->capture_default_str();
  interval_cmd->add_option("--low-offset", a->low_offset, "constant added to the lower endpoint")->capture_default_str();
  interval_cmd->add_flag("--clip", a->clip, "intersect with [min, max] of the spectrum first");

  auto* shift_cmd = reg.add("shift", "Shifted inclusion of C(n - q, r) + C(q,2) in C(n, r+1), q = floor(n/(r+1))", [a]() {
    const bool ok = shift_inclusion_check(a->n, a->r, spectrum_options());
    Output out;
    out.doc = {{"n", a->n}, {"r", a->r}, {"holds", ok}};
    out.verified = ok;
    out.failure = "shifted spectrum not contained";
    return out;
  });
  shift_cmd->add_option("--n", a->n, "vertex count")->required()->check(CLI::PositiveNumber);
  shift_cmd->add_option("--r", a->r, "maximum number of cliques")->required()->check(CLI::PositiveNumber);
}

void register_pairs(Registry& reg) {
  auto& g = reg.g;
  struct PairArgs {
    i64 m = 0, f = 0;
  };
  auto a = std::make_shared<PairArgs>();

  auto* classify_cmd = reg.add("classify", "Density bounds for a pair (m, f) with the rules that fired", [a, &g]() {
    const auto v = classify_pair(a->m, a->f);
    if (g.check) {
      const auto w = classify_pair(a->m, choose2(a->m) - a->f);
      require_check(v.exact == w.exact && v.upper == w.upper && v.lower == w.lower, "complement gives the same verdict");
      if (v.lower) require_check(*v.lower <= v.upper, "lower <= upper");
    }
    Output out;
    out.doc = verdict_json(a->m, a->f, v);
    out.table = Table{{"rule", "kind", "effect"}, {}};
    for (const auto& e : v.trace) out.table->rows.push_back({e.rule, e.kind, e.effect});
    return out;
  });
  classify_cmd->add_option("--m", a->m, "subgraph order")->required()->check(CLI::Range(i64{2}, i64{3'000'000'000}));
  classify_cmd->add_option("--f", a->f, "subgraph edge count")->required()->check(CLI::NonNegativeNumber);

  auto* minr_cmd = reg.add("minr", "Smallest r with f a sum of r+1 triangular numbers of arguments summing to m", [a, &g]() {
    const auto r = min_r(a->m, a->f);
    if (g.check && a->m <= 2000) {
      std::optional<i64> expected;
      for (i64 k = 1; k <= a->m && !expected; ++k)
        if (spectrum(a->m, k, spectrum_options()).contains(a->f)) expected = k - 1;
      require_check(expected == r, "clique spectrum agrees");
    }
    Output out;
    out.doc = {{"m", a->m}, {"f", a->f}, {"min_r", optional_value(r)}};
    return out;
  });
  minr_cmd->add_option("--m", a->m, "subgraph order")->required()->check(CLI::Range(i64{2}, i64{3'000'000'000}));
  minr_cmd->add_option("--f", a->f, "subgraph edge count")->required()->check(CLI::NonNegativeNumber);

  auto* dm_cmd = reg.add("dm", "Is f = xy + z with x <= y, x + y <= m, and x + y + z <= m - 1 when z >= 1", [a, &g]() {
    const auto w = in_dm(a->f, a->m);
    if (g.check && w) {
      require_check(w->x * w->y + w->z == a->f && w->x <= w->y && w->x + w->y <= a->m, "xy + z = f");
      if (w->z >= 1) require_check(w->x + w->y + w->z <= a->m - 1, "side constraint");
    }
    Output out;
    out.doc = {{"m", a->m}, {"f", a->f}, {"member", w.has_value()}};
    out.doc["x"] = w ? Json(w->x) : Json(nullptr);
    out.doc["y"] = w ? Json(w->y) : Json(nullptr);
    out.doc["z"] = w ? Json(w->z) : Json(nullptr);
    return out;
  });
  dm_cmd->add_option("--m", a->m, "subgraph order")->required()->check(CLI::Range(i64{2}, i64{3'000'000'000}));
  dm_cmd->add_option("--f", a->f, "subgraph edge count")->required()->check(CLI::NonNegativeNumber);
}

void register_pell(Registry& reg) {
  auto& g = reg.g;
  struct PellArgs {
    i64 k = 1;
    i64 k_max = 0;
    i64 solutions = -1;
    std::string limit = std::to_string(kDefaultTwoPartLimit);
    i64 m = 0, f = 0;
  };
  auto a = std::make_shared<PellArgs>();

  auto* pell_cmd = reg.add("pell", "Solutions of x^2 - 7y^2 = -3 and the derived family of pairs", [a, &g]() {
    Output out;
    const BigInt limit(a->limit);
    if (a->solutions >= 0) {
      Json arr = Json::array();
      Table t{{"k", "x", "y"}, {}};
      for (const auto& s : pell_solutions(a->solutions)) {
        if (g.check) require_check(s.x * s.x - 7 * s.y * s.y == -3, "x^2 - 7y^2 = -3");
        arr.push_back({{"k", s.k}, {"x", big(s.x)}, {"y", big(s.y)}});
        t.rows.push_back({std::to_string(s.k), s.x.str(), s.y.str()});
      }
      out.doc = arr;
      out.table = t;
      return out;
    }
    const i64 first = a->k_max > 0 ? 1 : a->k;
    const i64 last = a->k_max > 0 ? a->k_max : a->k;
    Json arr = Json::array();
    Table t{{"k", "t", "m", "f", "a", "b", "c", "A", "B", "C"}, {}};
    for (i64 k = first; k <= last; ++k) {
      const auto p = family_pair(k);
      const auto r = verify_abc(p, limit);
      if (g.check) {
        require_check(p.m == 5 * p.t + 2 && p.f == choose2(p.a) && p.f == choose2(p.m) - choose2(p.b) && p.f == p.c * (p.m - p.c),
                      "family identities");
      }
      if (r.c.status == TwoPartStatus::Violated || !r.a_holds || !r.b_holds) {
        out.verified = false;
        out.failure = "family pair failed a property";
      }
      arr.push_back(family_json(p, r));
      t.rows.push_back({std::to_string(k), p.t.str(), p.m.str(), p.f.str(), p.a.str(), p.b.str(), p.c.str(),
                        r.a_holds ? "true" : "false", r.b_holds ? "true" : "false", to_string(r.c.status)});
    }
    out.doc = a->k_max > 0 ? arr : arr[0];
    out.table = t;
    return out;
  });
  pell_cmd->add_option("--k", a->k, "family index (>= 1)")->capture_default_str()->check(CLI::PositiveNumber);
  pell_cmd->add_option("--k-max", a->k_max, "emit the family table for k = 1..K")->check(CLI::PositiveNumber);
  pell_cmd->add_option("--solutions", a->solutions, "list raw solutions with index 0..K instead")->check(CLI::NonNegativeNumber);
  pell_cmd->add_option("--limit", a->limit, "largest m for the exhaustive two-part loop")->capture_default_str();

  auto* abc_cmd = reg.add("abc", "Properties A, B, C for a family pair, or the two-part test for any (m, f)", [a]() {
    Output out;
    const BigInt limit(a->limit);
    if (a->m > 0) {
      const auto c = check_no_two_part(a->m, a->f, limit);
      out.doc = {{"m", a->m},
                 {"f", a->f},
                 {"status", to_string(c.status)},
                 {"iterations", big(c.iterations)},
                 {"counterexample", c.counterexample ? big(*c.counterexample) : Json(nullptr)}};
      if (c.counterexample) out.doc["counterexample_parts"] = {big(*c.counterexample), big(BigInt(a->m) - *c.counterexample)};
      return out;
    }
    const auto p = family_pair(a->k);
    const auto r = verify_abc(p, limit);
    out.doc = family_json(p, r);
    out.verified = r.all_pass();
    out.failure = r.c.status == TwoPartStatus::SkippedExhaustive ? "property C skipped: m above --limit" : "property failed";
    return out;
  });
  abc_cmd->add_option("--k", a->k, "family index (>= 1)")->capture_default_str()->check(CLI::PositiveNumber);
  abc_cmd->add_option("--m", a->m, "test an arbitrary pair instead")->check(CLI::PositiveNumber);
  abc_cmd->add_option("--f", a->f, "edge count for --m")->check(CLI::NonNegativeNumber);
  abc_cmd->add_option("--limit", a->limit, "largest m for the exhaustive two-part loop")->capture_default_str();
}

void register_squares(Registry& reg) {
  auto& g = reg.g;
  struct SquareArgs {
    u64 v = 0;
    std::optional<u64> to;
    i64 y_limit = 10000;
    i64 n = 0, m = 0;
    i64 samples = 0;
    bool linear = false;
  };
  auto a = std::make_shared<SquareArgs>();

  auto* ts_cmd = reg.add("three-squares", "Decompose v (or every v in a range) as x^2 + y^2 + z^2", [a, &g]() {
    Output out;
    const u64 last = a->to.value_or(a->v);
    if (last < a->v) throw CLI::ValidationError("--to", "must be at least --v");
    std::optional<TwoSquareTable> table;
    if (last - a->v > 1000 && last <= (u64{1} << 32)) table.emplace(last);
    Table t{{"v", "representable", "x", "y", "z"}, {}};
    for (u64 v = a->v;; ++v) {
      const auto d = three_square_decomp(v, table ? &*table : nullptr);
      if (g.check) {
        require_check(d.has_value() == is_three_square(v), "closed form agrees at " + std::to_string(v));
        if (d) require_check(d->x * d->x + d->y * d->y + d->z * d->z == v, "sum of squares");
      }
      Json row{{"v", v}, {"representable", d.has_value()}};
      row["x"] = d ? Json(d->x) : Json(nullptr);
      row["y"] = d ? Json(d->y) : Json(nullptr);
      row["z"] = d ? Json(d->z) : Json(nullptr);
      t.rows.push_back({std::to_string(v), d ? "true" : "false", d ? std::to_string(d->x) : "", d ? std::to_string(d->y) : "",
                        d ? std::to_string(d->z) : ""});
      if (a->to) out.lines.push_back(std::move(row)); else out.doc = std::move(row);
      if (v == last) break;
    }
    out.table = t;
    return out;
  });
  ts_cmd->add_option("--v", a->v, "value (or first value of the range)")->required();
  ts_cmd->add_option("--to", a->to, "last value of the range; output becomes JSON lines");

  auto* bennett_cmd = reg.add("bennett", "Solutions of 2 C(x,2) = C(y^2,2) with 2 <= y <= limit", [a]() {
    Output out;
    const auto found = bennett_search(a->y_limit);
    Json sols = Json::array();
    Table t{{"x", "y"}, {}};
    for (auto [x, y] : found) {
      sols.push_back({x, y});
      t.rows.push_back({std::to_string(x), std::to_string(y)});
    }
    out.doc = {{"y_limit", a->y_limit}, {"solutions", sols}};
    out.table = t;
    return out;
  });
  bennett_cmd->add_option("--y-limit", a->y_limit, "largest y searched")->capture_default_str();

  auto* w7_cmd = reg.add("witness7", "Seven cliques on n vertices with exactly m edges", [a, &g]() {
    Witness7Options opts;
    opts.linear_t0_search = a->linear;
    Output out;
    Table t{{"n", "m", "t", "s1", "s2", "s3", "p1", "p2", "p3", "p4", "p5", "p6", "p7", "window_offset"}, {}};
    auto emit = [&](const Witness7& w) {
      std::vector<std::string> row{std::to_string(w.n), std::to_string(w.m), std::to_string(w.t)};
      for (i64 s : w.s) row.push_back(std::to_string(s));
      for (i64 p : w.parts) row.push_back(std::to_string(p));
      row.push_back(std::to_string(w.window_offset));
      t.rows.push_back(std::move(row));
    };
    if (a->samples > 0) {
      const auto iv = witness7_interval(a->n);
      if (iv.empty()) throw PreconditionViolated("witness7: interval empty for n = " + std::to_string(a->n));
      std::optional<TwoSquareTable> table;
      if (a->n <= 100'000) table.emplace(static_cast<u64>(a->n) * static_cast<u64>(a->n));
      opts.table = table ? &*table : nullptr;
      std::mt19937_64 rng(g.seed);
      std::uniform_int_distribution<i64> pick(iv.lo, iv.hi);
      for (i64 i = 0; i < a->samples; ++i) {
        const i64 m = pick(rng);
        try {
          const auto w = witness7(a->n, m, opts);
          out.lines.push_back(witness7_json(w, validate_witness7(w)));
          emit(w);
        } catch (const WindowExhausted& e) {
          out.lines.push_back({{"n", a->n}, {"m", m}, {"verified", false}, {"error", e.what()}});
          out.verified = false;
          out.failure = "window exhausted";
        }
      }
    } else {
      const auto w = witness7(a->n, a->m, opts);
      const bool ok = validate_witness7(w);
      if (g.check) require_check(ok, "substitution");
      out.doc = witness7_json(w, ok);
      emit(w);
    }
    out.table = t;
    return out;
  });
  w7_cmd->add_option("--n", a->n, "vertex count")->required()->check(CLI::PositiveNumber);
  w7_cmd->add_option("--m", a->m, "edge count");
  w7_cmd->add_option("--samples", a->samples, "draw this many uniform m from the admissible interval (JSON lines)");
  w7_cmd->add_flag("--linear-t0", a->linear, "locate t0 by linear scan");
}

void register_graphs(Registry& reg) {
  auto& g = reg.g;
  struct GraphArgs {
    int n = 0, m = 0;
    i64 e = 0, f = 0;
    bool canonical = false;
    i64 r = 0, trials = 0;
    i64 N = 0, E = 0, sample = 0;
  };
  auto a = std::make_shared<GraphArgs>();

  auto* arrow_cmd = reg.add("arrow", "Does every n-vertex e-edge graph induce an m-vertex f-edge subgraph?", [a, &g]() {
    const auto r = arrow(a->n, a->e, a->m, a->f, search_options(g, a->canonical));
    if (g.check && r.counterexample) require_check(is_counterexample(*r.counterexample, a->e, a->m, a->f), "counterexample");
    Output out;
    out.doc = {{"n", a->n}, {"e", a->e}, {"m", a->m}, {"f", a->f}, {"holds", r.holds}};
    if (r.counterexample) {
      Json edges = Json::array();
      for (auto [i, j] : r.counterexample->edge_list()) edges.push_back({i, j});
      out.doc["counterexample"] = {{"mask", r.counterexample->edges}, {"edges", edges}};
    } else {
      out.doc["counterexample"] = nullptr;
    }
    return out;
  });
  arrow_cmd->add_option("--n", a->n, "host order")->required();
  arrow_cmd->add_option("--e", a->e, "host edge count")->required();
  arrow_cmd->add_option("--m", a->m, "subgraph order")->required();
  arrow_cmd->add_option("--f", a->f, "subgraph edge count")->required();
  arrow_cmd->add_flag("--canonical", a->canonical, "enumerate isomorphism classes (allows n = 8)");

  auto snm_body = [a, &g](bool runs) {
    const auto s = compute_snm(a->n, a->m, a->f, search_options(g, a->canonical));
    if (g.check && a->n <= kMaxLabeledVertices)
      require_check(compute_snm(a->n, a->m, a->f, {a->canonical ? Enumeration::Labeled : Enumeration::Canonical, g.threads}) == s,
                    "labeled and canonical enumeration agree");
    Output out;
    if (!runs) {
      out.doc = {{"n", a->n}, {"m", a->m}, {"f", a->f}, {"count", s.count()}, {"members", s.members()}};
      out.table = members_table(s.members(), "edges");
      return out;
    }
    const auto rr = interval_runs(s);
    Json list = Json::array();
    Table t{{"start", "end"}, {}};
    for (auto [lo, hi] : rr.runs) {
      list.push_back({lo, hi});
      t.rows.push_back({std::to_string(lo), std::to_string(hi)});
    }
    out.doc = {{"n", a->n}, {"m", a->m}, {"f", a->f}, {"runs", list}, {"run_count", rr.runs.size()}, {"members", rr.members}, {"density", rr.density}};
    out.table = t;
    return out;
  };
  for (auto [name, runs] : {std::pair{"snm", false}, std::pair{"runs", true}}) {
    auto* cmd = reg.add(name, runs ? "Maximal runs of consecutive members of S_n(m,f)" : "All e with (n,e) -> (m,f)",
                        [snm_body, runs = runs]() { return snm_body(runs); });
    cmd->add_option("--n", a->n, "host order")->required();
    cmd->add_option("--m", a->m, "subgraph order")->required();
    cmd->add_option("--f", a->f, "subgraph edge count")->required();
    cmd->add_flag("--canonical", a->canonical, "enumerate isomorphism classes (allows n = 8)");
  }

  auto* turan_cmd = reg.add("turan", "S_n(m, C(m,2)) against the Turan threshold, m in {3, 4}", [a, &g]() {
    const auto r = turan_check(a->n, a->m, search_options(g, a->canonical));
    Output out;
    out.doc = {{"n", a->n}, {"m", a->m}, {"turan", r.turan}, {"holds", r.holds}, {"members", r.members}};
    out.verified = r.holds;
    out.failure = "S_n differs from the Turan threshold set";
    return out;
  });
  turan_cmd->add_option("--n", a->n, "host order")->required();
  turan_cmd->add_option("--m", a->m, "clique order (3 or 4)")->required();
  turan_cmd->add_flag("--canonical", a->canonical, "enumerate isomorphism classes (allows n = 8)");

  auto* closure_cmd = reg.add("closure", "Induced subgraphs of a union of r cliques are unions of r cliques", [a, &g]() {
    const auto r = induced_closure_check(a->n, a->r, a->m, a->trials, g.seed);
    Output out;
    out.doc = {{"n", a->n}, {"r", a->r}, {"m", a->m}, {"trials", a->trials}, {"seed", g.seed},
               {"exhaustive", r.exhaustive}, {"graphs", r.graphs}, {"subsets", r.subsets}, {"holds", r.holds}};
    if (!r.holds) out.doc["failure"] = {{"clique_of_vertex", r.clique_of_vertex}, {"subset", r.subset}, {"edges", r.subset_edges}};
    out.verified = r.holds;
    out.failure = "induced edge count outside C(m, r)";
    return out;
  });
  closure_cmd->add_option("--n", a->n, "vertex count (<= 12)")->required();
  closure_cmd->add_option("--r", a->r, "number of cliques")->required();
  closure_cmd->add_option("--m", a->m, "subset size")->required();
  closure_cmd->add_option("--trials", a->trials, "random draws when n > 10")->capture_default_str();

  auto* conc_cmd = reg.add("concentration", "Induced edge counts of random n-subsets of a fixed random graph", [a, &g]() {
    const auto r = concentration_experiment(a->N, a->E, a->sample, a->trials, g.seed);
    Output out;
    out.doc = concentration_json(r);
    Table t{{"t", "bound", "frequency", "std_error", "ok"}, {}};
    for (const auto& row : r.tail)
      t.rows.push_back({Json(row.t).dump(), Json(row.bound).dump(), Json(row.frequency).dump(), Json(row.std_error).dump(), row.ok ? "true" : "false"});
    out.table = t;
    out.verified = r.tail_ok && (!r.exact_checked || r.exact_holds);
    out.failure = "tail bound or expectation identity violated";
    return out;
  });
  conc_cmd->add_option("--N", a->N, "host order")->required();
  conc_cmd->add_option("--E", a->E, "host edge count")->required();
  conc_cmd->add_option("--n", a->sample, "subset size")->required();
  conc_cmd->add_option("--trials", a->trials, "number of sampled subsets")->capture_default_str();
}

void register_reps(Registry& reg) {
  auto& g = reg.g;
  struct RepArgs {
    i64 n = 0;
    std::optional<i64> N, sum_cap;
    double lo_margin = 0, hi_margin = 0;
    std::optional<double> epsilon;
    bool faithful = false;
  };
  auto a = std::make_shared<RepArgs>();

  auto resolve = [a]() {
    Json meta = Json::object();
    i64 N = a->N.value_or(a->n / 5);
    if (a->faithful) {
      const auto p = faithful_parameters(a->n);
      N = p.N;
      meta = {{"faithful", true}, {"log", "natural"}, {"coordinate_cap", p.N}, {"margin", p.margin}};
    }
    return std::pair{N, meta};
  };

  auto* rep_cmd = reg.add("repcount", "Histogram of m = (Q(x) - n)/2 over 4-tuples", [a, &g, resolve]() {
    const auto [N, meta] = resolve();
    if (N < 1) throw PreconditionViolated("repcount: coordinate cap below 1 for n = " + std::to_string(a->n));
    RepOptions opts;
    opts.threads = g.threads;
    const auto h = rep_histogram(a->n, N, a->sum_cap.value_or(a->n), opts);
    if (g.check) {
      const auto s = spectrum(a->n, 5, spectrum_options());
      for (std::size_t m = 0; m < h.counts.size(); ++m)
        if (h.counts[m]) require_check(s.contains(static_cast<i64>(m)), "represented m = " + std::to_string(m) + " in C(n,5)");
    }
    Output out;
    Json counts = Json::array();
    Table t{{"m", "R"}, {}};
    i64 support = 0;
    for (std::size_t m = 0; m < h.counts.size(); ++m) {
      if (!h.counts[m]) continue;
      ++support;
      counts.push_back({m, h.counts[m]});
      t.rows.push_back({std::to_string(m), std::to_string(h.counts[m])});
    }
    out.doc = {{"n", h.n}, {"N", h.N}, {"sum_cap", h.sum_cap}, {"tuples", h.total()}, {"support", support}};
    if (!meta.empty()) out.doc["parameters"] = meta;
    out.doc["counts"] = counts;
    out.table = t;
    return out;
  });
  rep_cmd->add_option("--n", a->n, "vertex count")->required()->check(CLI::PositiveNumber);
  rep_cmd->add_option("--N", a->N, "coordinate cap (default n/5)");
  rep_cmd->add_option("--sum-cap", a->sum_cap, "cap on x1 + x2 + x3 + x4 (default n)");
  rep_cmd->add_flag("--faithful", a->faithful, "coordinate cap n/5 - n/ln n");

  auto* exc_cmd = reg.add("exceptional", "Count m in the scan range with no representation", [a, &g, resolve]() {
    auto [N, meta] = resolve();
    double lo_margin = a->lo_margin, hi_margin = a->hi_margin;
    if (a->epsilon) lo_margin = hi_margin = *a->epsilon * static_cast<double>(a->n) * static_cast<double>(a->n);
    if (a->faithful) lo_margin = hi_margin = meta["margin"].get<double>();
    if (N < 1) throw PreconditionViolated("exceptional: coordinate cap below 1 for n = " + std::to_string(a->n));
    RepOptions opts;
    opts.threads = g.threads;
    const auto h = rep_histogram(a->n, N, a->sum_cap.value_or(a->n), opts);
    const auto r = exceptional_count(h, lo_margin, hi_margin);
    if (g.check) require_check(r.zeros + r.nonzeros == r.range_length, "zeros + nonzeros = range length");
    Output out;
    out.doc = {{"n", a->n},
               {"N", N},
               {"sum_cap", h.sum_cap},
               {"lo_margin", lo_margin},
               {"hi_margin", hi_margin},
               {"range", {r.lo, r.hi}},
               {"empty", r.empty},
               {"range_length", r.range_length},
               {"zeros_in_range", r.zeros},
               {"nonzeros_in_range", r.nonzeros},
               {"fraction", r.fraction}};
    if (!meta.empty()) out.doc["parameters"] = meta;
    return out;
  });
  exc_cmd->add_option("--n", a->n, "vertex count")->required()->check(CLI::PositiveNumber);
  exc_cmd->add_option("--N", a->N, "coordinate cap (default n/5)");
  exc_cmd->add_option("--sum-cap", a->sum_cap, "cap on x1 + x2 + x3 + x4 (default n)");
  exc_cmd->add_option("--lo-margin", a->lo_margin, "added to n^2/10")->capture_default_str();
  exc_cmd->add_option("--hi-margin", a->hi_margin, "subtracted from (n^2 - n)/2")->capture_default_str();
  exc_cmd->add_option("--epsilon", a->epsilon, "set both margins to epsilon n^2");
  exc_cmd->add_flag("--faithful", a->faithful, "coordinate cap n/5 - n/ln n and margins n^2/ln n");
}

Json typed(const std::string& s) {
  const Json parsed = Json::parse(s, nullptr, false);
  if (!parsed.is_discarded() && parsed.is_number()) return parsed;
  return s;
}

Json collect_parameters(const CLI::App* sub) {
  Json params = Json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_lnames().empty() || opt->get_lnames()[0] == "help") continue;
    const std::string& name = opt->get_lnames()[0];
    if (opt->get_expected_min() == 0) {
      params[name] = opt->count() > 0;
    } else if (opt->count() > 0) {
      params[name] = typed(opt->as<std::string>());
    } else if (!opt->get_default_str().empty()) {
      params[name] = typed(opt->get_default_str());
    }
  }
  return params;
}

std::string render(const Output& out, bool csv) {
  if (csv) return render_csv(out.table ? *out.table : scalar_table(out.doc));
  if (!out.lines.empty()) {
    std::string s;
    for (const auto& l : out.lines) s += l.dump() + '\n';
    return s;
  }
  return out.doc.dump() + '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique spectra, induced-subgraph arrows and the number theory behind them", "induced"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--check", g.check, "re-validate results by substitution before printing");
  app.add_flag("--csv", g.csv, "CSV instead of JSON");
  app.add_option("--threads", g.threads, "worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--manifest", g.manifest_path, "also write the run manifest to this file");

  Registry reg{app, g, {}};
  register_spectrum(reg);
  register_pairs(reg);
  register_pell(reg);
  register_squares(reg);
  register_graphs(reg);
  register_reps(reg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (auto& [sub, handler] : reg.handlers) {
    if (!sub->parsed()) continue;
    const auto start = std::chrono::steady_clock::now();
    Output out;
    int code = 0;
    try {
      out = handler();
    } catch (const VerificationFailed& e) {
      std::cerr << "induced " << sub->get_name() << ": " << e.what() << '\n';
      return 1;
    } catch (const WindowExhausted& e) {
      std::cerr << "induced " << sub->get_name() << ": " << e.what() << '\n';
      return 1;
    } catch (const CLI::ValidationError& e) {
      std::cerr << "induced " << sub->get_name() << ": " << e.what() << '\n';
      return 2;
    } catch (const std::invalid_argument& e) {
      std::cerr << "induced " << sub->get_name() << ": " << e.what() << '\n';
      return 2;
    } catch (const std::domain_error& e) {
      std::cerr << "induced " << sub->get_name() << ": " << e.what() << '\n';
      return 2;
    } catch (const ResourceLimitExceeded& e) {
      std::cerr << "induced " << sub->get_name() << ": " << e.what() << '\n';
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "induced " << sub->get_name() << ": " << e.what() << '\n';
      return 1;
    }

    const std::string text = render(out, g.csv);
    std::cout << text << std::flush;
    if (!out.verified) {
      std::cerr << "induced " << sub->get_name() << ": " << out.failure << '\n';
      code = 1;
    }

    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Json manifest{{"subcommand", sub->get_name()},
                  {"parameters", collect_parameters(sub)},
                  {"seed", g.seed},
                  {"threads", g.threads},
                  {"check", g.check},
                  {"format", g.csv ? "csv" : (out.lines.empty() ? "json" : "jsonl")},
                  {"version", kVersion},
                  {"wall_time_s", wall},
                  {"output_digest", "fnv1a64:" + hex64(fnv1a(text))},
                  {"exit_code", code}};
    std::cerr << manifest.dump() << '\n';
    if (!g.manifest_path.empty()) {
      std::ofstream mf(g.manifest_path);
      if (!mf) {
        std::cerr << "induced: cannot write manifest to " << g.manifest_path << '\n';
        return 2;
      }
      mf << manifest.dump(2) << '\n';
    }
    return code;
  }
  return 2;
}
