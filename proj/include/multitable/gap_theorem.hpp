#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace multitable {

// Closed-form description of the primitive gaps of the N×N multiplication
// table.  For N >= 2 the gap set is {0..T} ∪ B_N where
//   R   = largest j with floor(j^2/4) < N,
//   T   = R, R-1 or R-2 depending on whether N is a square, pronic,
//         square-1, pronic-1, or none of those,
//   B_N = { N - floor(j^2/4) : 1 <= j <= R-2 }.
// Every element of B_N is strictly larger than every element of {0..T}.

inline constexpr std::uint64_t kMaxTableSide = 0xFFFFFFFFull;  // N^2 must fit in 64 bits

enum class NFormTag { Square, Pronic, SquareMinusOne, PronicMinusOne, Other };

/// Which of the four special shapes N has, with its witness k:
/// Square: N = k^2, Pronic: N = k^2+k, SquareMinusOne: N = k^2-1,
/// PronicMinusOne: N = k^2+k-1.  k is 0 for Other.
struct NForm {
  NFormTag tag = NFormTag::Other;
  std::uint64_t k = 0;

  bool operator==(const NForm&) const = default;
};

std::string to_string(NFormTag tag);

struct GapClassification {
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  std::uint64_t t = 0;
  NForm form;
  std::uint64_t s_max = 0;              // top of the contiguous range {0..T}
  std::vector<std::uint64_t> b_set;     // strictly increasing; empty iff R <= 2

  bool operator==(const GapClassification&) const = default;
};

/// An ordered factor pair (a, b), both in [1, N].
struct FactorPair {
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  std::uint64_t product() const { return a * b; }
  bool operator==(const FactorPair&) const = default;
};

/// Two table elements realizing a primitive gap hi - lo.
/// lo == hi only for the canonical gap-0 witness (a repeated product).
struct WitnessInterval {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  FactorPair lo_factors;
  FactorPair hi_factors;
  std::uint64_t gap = 0;

  bool operator==(const WitnessInterval&) const = default;
};

/// a_j = (N - floor(j/2))(N - ceil(j/2)) and b_j = N(N - j), the products
/// framing the top of the table.  a_j - b_j = floor(j^2/4) and
/// b_{j-1} - a_j = N - floor(j^2/4).
struct BoundaryProducts {
  std::uint64_t j = 0;
  std::uint64_t a_j = 0;
  std::uint64_t b_j = 0;

  bool operator==(const BoundaryProducts&) const = default;
};

/// Largest j >= 1 with floor(j^2/4) < n; roughly 2*sqrt(n).
/// Throws std::domain_error for n = 0 or n > kMaxTableSide.
std::uint64_t compute_r(std::uint64_t n);

/// Matches n >= 2 against the four special shapes, testing in the fixed
/// order Square, Pronic, SquareMinusOne, PronicMinusOne (the shapes are
/// mutually exclusive for n >= 2; the order makes that assumption explicit).
NForm classify_form(std::uint64_t n);

/// T = R for squares/pronics, R-1 for square-1/pronic-1, R-2 otherwise.
std::uint64_t compute_t(std::uint64_t n);

/// The full closed-form answer for one n.  Checks the S/B disjointness
/// postcondition before returning.
GapClassification gap_set(std::uint64_t n);

/// Requires 0 <= j <= n-1 so that both products have factors in [1, n].
BoundaryProducts boundary_products(std::uint64_t n, std::uint64_t j);

/// An interval realizing g as a primitive gap of the n×n table.
/// Throws not_a_gap if g is not in S_N ∪ B_N.
WitnessInterval witness_for_gap(std::uint64_t n, std::uint64_t g);

/// The gaps beyond R-2 granted by the special forms, with their witnesses:
/// empty for Other; {R-1} for square-1/pronic-1; {R-1, R} for square/pronic.
std::vector<std::pair<std::uint64_t, WitnessInterval>> exceptional_gaps(std::uint64_t n);

}  // namespace multitable
