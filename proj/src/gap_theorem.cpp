#include "multitable/gap_theorem.hpp"

#include <stdexcept>

#include "multitable/errors.hpp"
#include "multitable/int_math.hpp"

namespace multitable {

namespace {

void require_min_n(std::uint64_t n) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  if (n > kMaxTableSide) throw std::domain_error("n exceeds the 2^32-1 width cap");
}

// Largest k with k^2 <= n.
std::uint64_t floor_square_root(std::uint64_t n) { return isqrt(n); }

// Largest k with k^2 + k <= n.
std::uint64_t floor_pronic_root(std::uint64_t n) {
  std::uint64_t k = isqrt(n);
  while (k * k + k > n) --k;
  return k;
}

}  // namespace

std::string to_string(NFormTag tag) {
  switch (tag) {
    case NFormTag::Square: return "square";
    case NFormTag::Pronic: return "pronic";
    case NFormTag::SquareMinusOne: return "square_minus_one";
    case NFormTag::PronicMinusOne: return "pronic_minus_one";
    case NFormTag::Other: return "other";
  }
  return "other";
}

std::uint64_t compute_r(std::uint64_t n) {
  if (n == 0) throw std::domain_error("n must be >= 1");
  if (n > kMaxTableSide) throw std::domain_error("n exceeds the 2^32-1 width cap");
  // floor(j^2/4) < n first fails near j = 2*sqrt(n); seed there and scan.
  std::uint64_t j = isqrt(4 * n);
  while (floor_quarter_square(j + 1) < n) ++j;
  while (j > 1 && floor_quarter_square(j) >= n) --j;
  return j;
}

NForm classify_form(std::uint64_t n) {
  require_min_n(n);
  std::uint64_t k = floor_square_root(n);
  if (k * k == n) return {NFormTag::Square, k};
  k = floor_pronic_root(n);
  if (k * k + k == n) return {NFormTag::Pronic, k};
  k = floor_square_root(n + 1);
  if (k * k == n + 1) return {NFormTag::SquareMinusOne, k};
  k = floor_pronic_root(n + 1);
  if (k * k + k == n + 1) return {NFormTag::PronicMinusOne, k};
  return {NFormTag::Other, 0};
}

std::uint64_t compute_t(std::uint64_t n) {
  require_min_n(n);
  const std::uint64_t r = compute_r(n);
  switch (classify_form(n).tag) {
    case NFormTag::Square:
    case NFormTag::Pronic:
      return r;
    case NFormTag::SquareMinusOne:
    case NFormTag::PronicMinusOne:
      return r - 1;
    case NFormTag::Other:
      return r - 2;
  }
  return r - 2;
}

GapClassification gap_set(std::uint64_t n) {
  require_min_n(n);
  GapClassification gc;
  gc.n = n;
  gc.r = compute_r(n);
  gc.form = classify_form(n);
  gc.t = compute_t(n);
  gc.s_max = gc.t;
  if (gc.r > 2) {
    gc.b_set.reserve(gc.r - 2);
    // j decreasing makes n - floor(j^2/4) increasing
    for (std::uint64_t j = gc.r - 2; j >= 1; --j)
      gc.b_set.push_back(n - floor_quarter_square(j));
  }
  if (!gc.b_set.empty() && gc.s_max >= gc.b_set.front())
    throw std::logic_error("S/B disjointness violated");  // cannot happen
  return gc;
}

BoundaryProducts boundary_products(std::uint64_t n, std::uint64_t j) {
  require_min_n(n);
  if (j >= n) throw std::domain_error("j must satisfy 0 <= j <= n-1");
  BoundaryProducts bp;
  bp.j = j;
  bp.a_j = (n - j / 2) * (n - (j + 1) / 2);
  bp.b_j = n * (n - j);
  return bp;
}

namespace {

WitnessInterval make_witness(std::uint64_t n, FactorPair lo, FactorPair hi) {
  const bool ok = lo.a >= 1 && lo.a <= n && lo.b >= 1 && lo.b <= n &&
                  hi.a >= 1 && hi.a <= n && hi.b >= 1 && hi.b <= n &&
                  hi.product() >= lo.product();
  if (!ok) throw std::logic_error("witness endpoints escape the table");  // cannot happen
  WitnessInterval w;
  w.lo = lo.product();
  w.hi = hi.product();
  w.lo_factors = lo;
  w.hi_factors = hi;
  w.gap = w.hi - w.lo;
  return w;
}

// R-1 realized by (k(k-1))^2 < (k^2-1)(k^2-2k+2), valid for N = k^2-1 and k^2.
WitnessInterval square_family_rm1(std::uint64_t n, std::uint64_t k) {
  return make_witness(n, {k * k - k, k * k - k}, {k * k - 1, k * k - 2 * k + 2});
}

// R-1 realized by k^2(k^2-1) < (k^2+k-1)(k^2-k+1), valid for N = k^2+k-1 and
// k^2+k.  Degenerate at k = 1 (lo would be 0); N = 2 uses 1 < 2 instead.
WitnessInterval pronic_family_rm1(std::uint64_t n, std::uint64_t k) {
  if (k == 1) return make_witness(n, {1, 1}, {1, 2});
  return make_witness(n, {k * k, k * k - 1}, {k * k + k - 1, k * k - k + 1});
}

// R realized by (k^2-k+1)^2 < k^2(k^2-2k+3) when N = k^2.
WitnessInterval square_r(std::uint64_t n, std::uint64_t k) {
  return make_witness(n, {k * k - k + 1, k * k - k + 1}, {k * k, k * k - 2 * k + 3});
}

// R realized by k^2(k^2+1) < (k^2+k)(k^2-k+2) when N = k^2+k.
WitnessInterval pronic_r(std::uint64_t n, std::uint64_t k) {
  return make_witness(n, {k * k, k * k + 1}, {k * k + k, k * k - k + 2});
}

}  // namespace

WitnessInterval witness_for_gap(std::uint64_t n, std::uint64_t g) {
  const GapClassification gc = gap_set(n);

  if (g == 0) {
    // any repeated value works; 1*n = n*1 is the canonical duplicate
    WitnessInterval w;
    w.lo = w.hi = n;
    w.lo_factors = {1, n};
    w.hi_factors = {n, 1};
    w.gap = 0;
    return w;
  }

  // B_N: g = n - floor(j^2/4) sits between a_j and b_{j-1}
  if (g > gc.s_max) {
    for (std::uint64_t j = 1; j + 2 <= gc.r; ++j) {
      if (n - floor_quarter_square(j) == g) {
        return make_witness(n, {n - j / 2, n - (j + 1) / 2}, {n, n - j + 1});
      }
    }
    throw not_a_gap("gap " + std::to_string(g) + " is not in S_N or B_N for n = " +
                    std::to_string(n));
  }

  // exceptional gaps at the top of S_N
  const std::uint64_t k = gc.form.k;
  switch (gc.form.tag) {
    case NFormTag::Square:
      if (g == gc.r) return square_r(n, k);
      if (g == gc.r - 1) return square_family_rm1(n, k);
      break;
    case NFormTag::Pronic:
      if (g == gc.r) return pronic_r(n, k);
      if (g == gc.r - 1) return pronic_family_rm1(n, k);
      break;
    case NFormTag::SquareMinusOne:
      if (g == gc.r - 1) return square_family_rm1(n, k);
      break;
    case NFormTag::PronicMinusOne:
      if (g == gc.r - 1) return pronic_family_rm1(n, k);
      break;
    case NFormTag::Other:
      break;
  }

  if (g == gc.r - 2) {
    // b_{R-1} < (N-1)(N-(R-2))
    return make_witness(n, {n, n - gc.r + 1}, {n - 1, n - gc.r + 2});
  }

  // 1 <= g <= R-3: same-sum step inside the b_j..a_j ladder.  Pick
  // j in {R, R-1} with the parity of g+1 and the largest admissible a,
  // which keeps the step far enough above b_j to be primitive.
  const std::uint64_t j = (gc.r % 2 == (g + 1) % 2) ? gc.r : gc.r - 1;
  const std::uint64_t a = (j - g - 1) / 2;
  return make_witness(n, {n - a, n - (j - a)}, {n - a - 1, n - (j - a - 1)});
}

std::vector<std::pair<std::uint64_t, WitnessInterval>> exceptional_gaps(std::uint64_t n) {
  const std::uint64_t r = compute_r(n);
  const NForm form = classify_form(n);
  std::vector<std::pair<std::uint64_t, WitnessInterval>> out;
  switch (form.tag) {
    case NFormTag::Square:
      out.emplace_back(r - 1, square_family_rm1(n, form.k));
      out.emplace_back(r, square_r(n, form.k));
      break;
    case NFormTag::Pronic:
      out.emplace_back(r - 1, pronic_family_rm1(n, form.k));
      out.emplace_back(r, pronic_r(n, form.k));
      break;
    case NFormTag::SquareMinusOne:
      out.emplace_back(r - 1, square_family_rm1(n, form.k));
      break;
    case NFormTag::PronicMinusOne:
      out.emplace_back(r - 1, pronic_family_rm1(n, form.k));
      break;
    case NFormTag::Other:
      break;
  }
  return out;
}

}  // namespace multitable
