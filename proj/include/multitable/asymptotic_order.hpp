#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace multitable {

// The asymptotic order on pairs (a, b) of non-negative integers: the order
// inherited from comparing the polynomials (X-a)(X-b) at large X.  Concretely
// (a,b) <= (c,d) iff a+b > c+d, or a+b = c+d and ab <= cd.  Pairs are stored
// normalized (a <= b) so the relation is a genuine total order.

struct PairAB {
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  PairAB() = default;
  PairAB(std::uint64_t x, std::uint64_t y) : a(x < y ? x : y), b(x < y ? y : x) {}

  std::uint64_t sum() const { return a + b; }
  std::uint64_t product() const { return a * b; }
  bool operator==(const PairAB&) const = default;
};

/// A primitive gap between adjacent pairs: either a positive integer
/// constant, or the polynomial X - c with c = floor(j^2/4).
struct SymbolicGap {
  enum class Kind { Constant, LinearInX };

  Kind kind = Kind::Constant;
  std::uint64_t c = 0;  // the constant itself, or the subtracted term of X - c

  static SymbolicGap constant(std::uint64_t value);
  static SymbolicGap linear_in_x(std::uint64_t c);  // validates c = floor(j^2/4)

  std::string display() const;  // "2", "X", "X-4", ...
  bool operator==(const SymbolicGap&) const = default;
};

/// less/equal/greater of p relative to q in the asymptotic order.
std::strong_ordering cmp_asymptotic(const PairAB& p, const PairAB& q);

/// The first `count` pairs in strictly decreasing order, starting at (0,0):
/// sum blocks in increasing sum, each block from the balanced pair down to
/// (0, j).  Requires count >= 1.
std::vector<PairAB> enumerate_descending(std::size_t count);

/// The gap from q up to p, for q immediately below p in the enumeration.
/// Throws std::invalid_argument when p and q are not adjacent.
SymbolicGap asymptotic_gap(const PairAB& p, const PairAB& q);

/// True iff (N-a)(N-b) > (N-c)(N-d) agrees with p > q asymptotically.
/// Requires all entries <= n and |ab - cd| < n (the transfer range).
bool transfer_check(std::uint64_t n, const PairAB& p, const PairAB& q);

}  // namespace multitable
