#include "induced/pell.hpp"

#include <stdexcept>

namespace induced {

BigInt choose2(const BigInt& x) { return x <= 1 ? BigInt(0) : BigInt(x * (x - 1) / 2); }

std::vector<PellSolution> pell_solutions(i64 k_max) {
  if (k_max < 0) throw std::invalid_argument("pell_solutions: k_max must be non-negative");
  std::vector<PellSolution> out;
  out.reserve(static_cast<std::size_t>(k_max) + 1);
  BigInt x = 2, y = 1;
  for (i64 k = 0; k <= k_max; ++k) {
    if (x * x - 7 * y * y != -3) throw std::logic_error("pell_solutions: generated pair fails the equation");
    out.push_back({k, x, y});
    BigInt nx = 8 * x + 21 * y;
    BigInt ny = 3 * x + 8 * y;
    x = std::move(nx);
    y = std::move(ny);
  }
  return out;
}

FamilyPair family_pair(i64 k) {
  if (k < 1) throw std::invalid_argument("family_pair: k must be at least 1");
  const auto sols = pell_solutions(2 * k);
  const BigInt& x = sols.back().x;
  const BigInt& y = sols.back().y;
  if (x % 2 != 0 || y % 2 != 1) throw std::logic_error("family_pair: expected x even and y odd at an even index");

  FamilyPair p;
  p.k = k;
  p.t = y - 1;
  p.m = 5 * p.t + 2;
  p.a = 3 * p.t + 1;
  p.b = 4 * p.t + 2;
  p.f = choose2(p.a);
  const BigInt twice_c = p.m - x;
  if (twice_c % 2 != 0) throw std::logic_error("family_pair: c is not integral");
  p.c = twice_c / 2;

  const bool ok = p.c > 0 && x * x == 7 * p.t * p.t + 14 * p.t + 4 && p.f == choose2(p.m) - choose2(p.b) &&
                  p.f == p.c * (p.m - p.c);
  if (!ok) throw std::logic_error("family_pair: identities fail");
  return p;
}

std::string to_string(TwoPartStatus s) {
  switch (s) {
    case TwoPartStatus::Holds: return "holds";
    case TwoPartStatus::Violated: return "violated";
    case TwoPartStatus::SkippedExhaustive: return "skipped-exhaustive";
  }
  return "unknown";
}

TwoPartCheck check_no_two_part(const BigInt& m, const BigInt& f, const BigInt& exhaustive_limit) {
  TwoPartCheck out;
  if (m > exhaustive_limit) return out;
  const BigInt half = m / 2;
  // 64-bit fast path while C(m,2) stays well inside range.
  if (m < BigInt(3'000'000'000LL)) {
    const i64 mm = m.convert_to<i64>();
    const i64 ff = f.convert_to<i64>();
    const i64 hh = half.convert_to<i64>();
    for (i64 y = 1; y <= hh; ++y) {
      if (induced::choose2(y) + induced::choose2(mm - y) == ff) {
        out.status = TwoPartStatus::Violated;
        out.counterexample = BigInt(y);
        out.iterations = y;
        return out;
      }
    }
    out.iterations = hh;
    out.status = TwoPartStatus::Holds;
    return out;
  }
  for (BigInt y = 1; y <= half; ++y) {
    if (choose2(y) + choose2(m - y) == f) {
      out.status = TwoPartStatus::Violated;
      out.counterexample = y;
      out.iterations = y;
      return out;
    }
  }
  out.iterations = half;
  out.status = TwoPartStatus::Holds;
  return out;
}

AbcReport verify_abc(const FamilyPair& p, const BigInt& exhaustive_c_limit) {
  AbcReport r;
  r.a_holds = p.a > 0 && p.b > 0 && p.c > 0 && p.f == choose2(p.a) && p.f == choose2(p.m) - choose2(p.b) &&
              p.f == p.c * (p.m - p.c);
  r.b_parts = {2 * p.t + 1, 2 * p.t + 1, p.t};
  r.b_holds = p.t >= 1 && r.b_parts[0] + r.b_parts[1] + r.b_parts[2] == p.m &&
              choose2(r.b_parts[0]) + choose2(r.b_parts[1]) + choose2(r.b_parts[2]) == p.f;
  r.c = check_no_two_part(p.m, p.f, exhaustive_c_limit);
  return r;
}

}  // namespace induced
