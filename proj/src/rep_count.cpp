#include "induced/rep_count.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "induced/errors.hpp"
#include "induced/parallel.hpp"

namespace induced {

i64 quadratic_form(i64 n, i64 x1, i64 x2, i64 x3, i64 x4) noexcept {
  const i64 rest = x1 + x2 + x3 + x4 - n;
  return x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4 + rest * rest;
}

u64 RepHistogram::total() const noexcept { return std::accumulate(counts.begin(), counts.end(), u64{0}); }

RepHistogram rep_histogram(i64 n, i64 N, i64 sum_cap, const RepOptions& options) {
  if (n < 1 || N < 1) throw std::invalid_argument("rep_histogram: need n >= 1 and N >= 1");
  if (sum_cap > n) throw std::invalid_argument("rep_histogram: sum_cap must not exceed n");
  const double estimate = std::pow(static_cast<double>(N), 4) / 24.0;
  if (estimate > options.max_iterations)
    throw ResourceLimitExceeded("rep_histogram: about " + std::to_string(estimate) + " tuples exceeds the cap");

  RepHistogram h;
  h.n = n;
  h.N = N;
  h.sum_cap = sum_cap;
  const auto size = static_cast<std::size_t>(choose2(n) + 1);
  const unsigned workers = static_cast<unsigned>(std::min<i64>(resolve_threads(options.threads), N));
  std::vector<std::vector<u64>> local(workers);

  run_workers(workers, [&](unsigned w, unsigned count) {
    auto& counts = local[w];
    counts.assign(size, 0);
    for (i64 a = 1 + w; a <= N; a += count) {
      for (i64 b = a; b <= N && a + 3 * b <= sum_cap; ++b) {
        for (i64 c = b; c <= N && a + b + 2 * c <= sum_cap; ++c) {
          for (i64 d = c; d <= N && a + b + c + d <= sum_cap; ++d) {
            // Orderings of a multiset of four values: 24 / prod(multiplicity!).
            u64 weight = 24;
            if (a == b && b == c && c == d) weight = 1;
            else if ((a == b && b == c) || (b == c && c == d)) weight = 4;
            else if (a == b && c == d) weight = 6;
            else if (a == b || b == c || c == d) weight = 12;
            const i64 q = quadratic_form(n, a, b, c, d);
            counts[static_cast<std::size_t>((q - n) / 2)] += weight;
          }
        }
      }
    }
  });

  h.counts.assign(size, 0);
  for (const auto& counts : local)
    for (std::size_t i = 0; i < size; ++i) h.counts[i] += counts[i];
  return h;
}

ExceptionalReport exceptional_count(const RepHistogram& h, double lo_margin, double hi_margin) {
  const long double n = static_cast<long double>(h.n);
  ExceptionalReport rep;
  rep.lo = static_cast<i64>(std::ceil(n * n / 10 + lo_margin));
  rep.hi = static_cast<i64>(std::floor((n * n - n) / 2 - hi_margin));
  rep.lo = std::max<i64>(rep.lo, 0);
  rep.empty = rep.lo > rep.hi;
  if (rep.empty) return rep;
  rep.range_length = rep.hi - rep.lo + 1;
  for (i64 m = rep.lo; m <= rep.hi; ++m) (h.at(m) == 0 ? rep.zeros : rep.nonzeros) += 1;
  rep.fraction = static_cast<double>(rep.zeros) / static_cast<double>(rep.range_length);
  return rep;
}

ExceptionalReport exceptional_count(i64 n, i64 N, double lo_margin, double hi_margin, const RepOptions& options) {
  return exceptional_count(rep_histogram(n, N, n, options), lo_margin, hi_margin);
}

FaithfulParameters faithful_parameters(i64 n) {
  if (n < 2) throw std::invalid_argument("faithful_parameters: n must be at least 2");
  const double nn = static_cast<double>(n);
  const double ln = std::log(nn);
  return {static_cast<i64>(std::floor(nn / 5 - nn / ln)), nn * nn / ln};
}

}  // namespace induced
