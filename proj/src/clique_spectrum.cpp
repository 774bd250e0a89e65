#include "induced/clique_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "induced/errors.hpp"

namespace induced {

i64 CliquePartition::edge_sum() const noexcept {
  i64 s = 0;
  for (i64 p : parts) s += choose2(p);
  return s;
}

bool CliquePartition::valid() const noexcept {
  if (std::any_of(parts.begin(), parts.end(), [](i64 p) { return p < 0; })) return false;
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>{})) return false;
  return std::accumulate(parts.begin(), parts.end(), i64{0}) == n;
}

EdgeSpectrum::EdgeSpectrum(i64 n, std::optional<i64> r, BitVector bits) : n_(n), r_(r), bits_(std::move(bits)) {
  if (bits_.size() != static_cast<std::size_t>(choose2(n) + 1))
    throw std::invalid_argument("EdgeSpectrum: table length must be C(n,2)+1");
}

std::optional<i64> EdgeSpectrum::min() const noexcept {
  auto i = bits_.find_next(0);
  return i ? std::optional<i64>(static_cast<i64>(*i)) : std::nullopt;
}

std::optional<i64> EdgeSpectrum::max() const noexcept {
  auto i = bits_.find_last();
  return i ? std::optional<i64>(static_cast<i64>(*i)) : std::nullopt;
}

std::vector<i64> EdgeSpectrum::members() const {
  std::vector<i64> out;
  for (auto i = bits_.find_next(0); i; i = bits_.find_next(*i + 1)) out.push_back(static_cast<i64>(*i));
  return out;
}

namespace {

// Layout of one DP layer: a bit block per vertex total v in [vmin, vmax], holding edge sums
// offset by lo(v).
struct Layer {
  i64 k = 0;
  i64 vmin = 0, vmax = -1;
  std::vector<i64> lo;
  std::vector<std::size_t> len;
  std::vector<std::size_t> start;
  std::vector<u64> words;

  std::span<u64> block(i64 v) {
    const auto i = static_cast<std::size_t>(v - vmin);
    return {words.data() + start[i], (len[i] + 63) / 64};
  }
  std::span<const u64> block(i64 v) const {
    const auto i = static_cast<std::size_t>(v - vmin);
    return {words.data() + start[i], (len[i] + 63) / 64};
  }
  bool test(i64 v, i64 e) const {
    if (v < vmin || v > vmax) return false;
    const auto i = static_cast<std::size_t>(v - vmin);
    if (e < lo[i]) return false;
    const auto bit = static_cast<std::size_t>(e - lo[i]);
    if (bit >= len[i]) return false;
    return (words[start[i] + bit / 64] >> (bit % 64)) & 1u;
  }
};

// Dimensions of the layered DP for n vertices and `parts` cliques (parts already capped at n).
struct Plan {
  i64 n, parts;

  i64 vmin(i64 k) const { return k == parts ? n : 0; }
  i64 vmax(i64 k) const { return k == parts ? n : k * n / parts; }
  i64 lo(i64 k, i64 v) const { return k == parts ? 0 : balanced_min_edges(v, k); }
  std::size_t len(i64 k, i64 v) const { return static_cast<std::size_t>(choose2(v) - lo(k, v) + 1); }

  std::size_t layer_words(i64 k) const {
    std::size_t w = 0;
    for (i64 v = vmin(k); v <= vmax(k); ++v) w += (len(k, v) + 63) / 64;
    return w;
  }

  Layer allocate(i64 k) const {
    Layer L;
    L.k = k;
    L.vmin = vmin(k);
    L.vmax = vmax(k);
    const auto count = static_cast<std::size_t>(L.vmax - L.vmin + 1);
    L.lo.resize(count);
    L.len.resize(count);
    L.start.resize(count);
    std::size_t w = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const i64 v = L.vmin + static_cast<i64>(i);
      L.lo[i] = lo(k, v);
      L.len[i] = len(k, v);
      L.start[i] = w;
      w += (L.len[i] + 63) / 64;
    }
    L.words.assign(w, 0);
    return L;
  }

  // Range of the k-th smallest part p given the total u of the previous k-1 parts.
  std::pair<i64, i64> part_range(i64 k, i64 u) const {
    const i64 p_lo = (u + (k - 2)) / (k - 1);
    const i64 p_hi = (n - u) / (parts - k + 1);
    return {p_lo, p_hi};
  }

  Layer first() const {
    Layer L = allocate(1);
    for (i64 v = L.vmin; v <= L.vmax; ++v) {
      const auto i = static_cast<std::size_t>(v - L.vmin);
      const auto bit = static_cast<std::size_t>(choose2(v) - L.lo[i]);
      L.words[L.start[i] + bit / 64] |= u64{1} << (bit % 64);
    }
    return L;
  }

  Layer next(const Layer& prev) const {
    const i64 k = prev.k + 1;
    Layer L = allocate(k);
    for (i64 u = prev.vmin; u <= prev.vmax; ++u) {
      const auto [p_lo, p_hi] = part_range(k, u);
      const auto src = prev.block(u);
      const i64 src_lo = prev.lo[static_cast<std::size_t>(u - prev.vmin)];
      for (i64 p = p_lo; p <= p_hi; ++p) {
        const i64 v = u + p;
        if (v < L.vmin || v > L.vmax) continue;
        const auto i = static_cast<std::size_t>(v - L.vmin);
        const i64 shift = src_lo + choose2(p) - L.lo[i];
        or_shifted(L.block(v), L.len[i], src, static_cast<std::size_t>(shift));
      }
    }
    return L;
  }
};

i64 effective_parts(i64 n, i64 r) {
  if (n < 0) throw std::invalid_argument("spectrum: n must be non-negative");
  if (r < 1) throw std::invalid_argument("spectrum: r must be at least 1");
  return std::min(r, std::max<i64>(n, 1));
}

void enforce_cap(std::size_t bytes, const SpectrumOptions& options) {
  if (bytes > options.memory_cap_bytes)
    throw ResourceLimitExceeded("spectrum table needs " + std::to_string(bytes) + " bytes, cap is " +
                                std::to_string(options.memory_cap_bytes));
}

EdgeSpectrum to_spectrum(const Layer& final_layer, i64 n, i64 r) {
  BitVector bits(static_cast<std::size_t>(choose2(n) + 1));
  const auto src = final_layer.block(n);
  std::copy(src.begin(), src.end(), bits.words().begin());
  return EdgeSpectrum(n, r, std::move(bits));
}

}  // namespace

std::size_t spectrum_memory_estimate(i64 n, i64 r, bool keep_all_layers) {
  const Plan plan{n, effective_parts(n, r)};
  std::size_t total = 0, peak = 0, prev = 0;
  for (i64 k = 1; k <= plan.parts; ++k) {
    const std::size_t w = plan.layer_words(k) * sizeof(u64);
    total += w;
    peak = std::max(peak, prev + w);
    prev = w;
  }
  return keep_all_layers ? total : peak;
}

EdgeSpectrum spectrum(i64 n, i64 r, const SpectrumOptions& options) {
  const i64 parts = effective_parts(n, r);
  enforce_cap(spectrum_memory_estimate(n, r, false), options);
  const Plan plan{n, parts};
  Layer layer = plan.first();
  for (i64 k = 2; k <= parts; ++k) layer = plan.next(layer);
  return to_spectrum(layer, n, r);
}

struct SpectrumTable::Impl {
  Plan plan;
  i64 r;
  std::vector<Layer> layers;
  EdgeSpectrum result;
};

SpectrumTable::SpectrumTable(i64 n, i64 r, const SpectrumOptions& options) {
  const i64 parts = effective_parts(n, r);
  enforce_cap(spectrum_memory_estimate(n, r, true), options);
  const Plan plan{n, parts};
  std::vector<Layer> layers;
  layers.push_back(plan.first());
  for (i64 k = 2; k <= parts; ++k) layers.push_back(plan.next(layers.back()));
  EdgeSpectrum result = to_spectrum(layers.back(), n, r);
  impl_ = std::make_unique<Impl>(Impl{plan, r, std::move(layers), std::move(result)});
}

SpectrumTable::~SpectrumTable() = default;
SpectrumTable::SpectrumTable(SpectrumTable&&) noexcept = default;
SpectrumTable& SpectrumTable::operator=(SpectrumTable&&) noexcept = default;

i64 SpectrumTable::n() const noexcept { return impl_->plan.n; }
i64 SpectrumTable::r() const noexcept { return impl_->r; }
const EdgeSpectrum& SpectrumTable::spectrum() const noexcept { return impl_->result; }

std::optional<CliquePartition> SpectrumTable::witness(i64 edges) const {
  const Plan& plan = impl_->plan;
  if (!impl_->result.contains(edges)) return std::nullopt;
  CliquePartition out{plan.n, {}};
  i64 v = plan.n, e = edges;
  for (i64 k = plan.parts; k >= 2; --k) {
    const Layer& prev = impl_->layers[static_cast<std::size_t>(k - 2)];
    const Layer& cur = impl_->layers[static_cast<std::size_t>(k - 1)];
    bool found = false;
    // Ascending u means descending p: the largest admissible part is taken first.
    for (i64 u = prev.vmin; u <= std::min(prev.vmax, v) && !found; ++u) {
      const i64 p = v - u;
      const auto [p_lo, p_hi] = plan.part_range(k, u);
      if (p < p_lo || p > p_hi || v < cur.vmin || v > cur.vmax) continue;
      if (prev.test(u, e - choose2(p))) {
        out.parts.push_back(p);
        v = u;
        e -= choose2(p);
        found = true;
      }
    }
    if (!found) throw std::logic_error("SpectrumTable::witness: broken back-pointer chain");
  }
  if (choose2(v) != e) throw std::logic_error("SpectrumTable::witness: inconsistent first layer");
  out.parts.push_back(v);
  std::erase(out.parts, 0);
  std::sort(out.parts.begin(), out.parts.end(), std::greater<>{});
  return out;
}

std::optional<CliquePartition> member_witness(i64 n, i64 r, i64 edges, const SpectrumOptions& options) {
  return SpectrumTable(n, r, options).witness(edges);
}

DensityReport density_and_bounds(const EdgeSpectrum& s) {
  if (!s.r()) throw std::invalid_argument("density_and_bounds: needs a clique spectrum");
  DensityReport d;
  d.n = s.n();
  d.r = *s.r();
  d.count = s.count();
  d.density = s.universe() > 0 ? static_cast<double>(d.count) / static_cast<double>(s.universe()) : 1.0;
  d.min_element = s.min().value_or(0);
  const i128 n2 = static_cast<i128>(d.n) * d.n;
  // min >= n^2/(2r) - n/2  <=>  2r min >= n^2 - r n
  d.min_bound_ok = 2 * static_cast<i128>(d.r) * d.min_element >= n2 - static_cast<i128>(d.r) * d.n;
  // count <= n^2/2 - n^2/(2r) + 1  <=>  2r (count - 1) <= n^2 (r - 1)
  d.count_bound_ok = 2 * static_cast<i128>(d.r) * (d.count - 1) <= n2 * (d.r - 1);
  return d;
}

DensityReport density_and_bounds(i64 n, i64 r, const SpectrumOptions& options) {
  if (n < 2) throw std::invalid_argument("density_and_bounds: n must be at least 2");
  return density_and_bounds(spectrum(n, r, options));
}

IntervalReport verify_interval(const EdgeSpectrum& s, const IntervalSpec& spec) {
  if (!s.r()) throw std::invalid_argument("verify_interval: needs a clique spectrum");
  const long double n = static_cast<long double>(s.n());
  const long double r = static_cast<long double>(*s.r());
  const long double lo = n * n / (2 * r) + spec.c_low * n + spec.low_offset;
  const long double hi = (n * n - n) / 2 - spec.c_high * n * std::sqrt(n);
  if (lo < 0) throw std::invalid_argument("verify_interval: lower endpoint is negative");

  IntervalReport rep;
  rep.lo = static_cast<i64>(std::ceil(lo));
  rep.hi = hi < 0 ? -1 : static_cast<i64>(std::floor(hi));
  if (spec.clip) {
    if (auto mn = s.min()) rep.lo = std::max(rep.lo, *mn);
    if (auto mx = s.max()) rep.hi = std::min(rep.hi, *mx);
  }
  if (rep.lo > rep.hi) {
    rep.vacuous = true;
    return rep;
  }
  for (i64 e = rep.lo; e <= rep.hi; ++e) {
    if (!s.contains(e)) {
      rep.ok = false;
      rep.first_gap = e;
      break;
    }
  }
  return rep;
}

IntervalReport verify_interval(i64 n, i64 r, const IntervalSpec& spec, const SpectrumOptions& options) {
  return verify_interval(spectrum(n, r, options), spec);
}

bool shift_inclusion_check(i64 n, i64 r, const SpectrumOptions& options) {
  if (r < 1 || n < r + 1) throw std::invalid_argument("shift_inclusion_check: need n >= r + 1 >= 2");
  const i64 q = n / (r + 1);
  const EdgeSpectrum smaller = spectrum(n - q, r, options);
  const EdgeSpectrum larger = spectrum(n, r + 1, options);
  const i64 shift = choose2(q);
  for (i64 e : smaller.members())
    if (!larger.contains(e + shift)) return false;
  return true;
}

}  // namespace induced
