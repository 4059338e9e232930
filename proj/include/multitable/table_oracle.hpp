#pragma once

#include <cstdint>
#include <vector>

namespace multitable {

// Ground-truth engine for the N×N multiplication table.  Everything here is
// enumeration: no use of the closed-form classification, so these results can
// sit on the other side of an equality test from gap_theorem.

inline constexpr std::uint64_t kDefaultNaiveCap = 10'000;    // full-table materialization
inline constexpr std::uint64_t kSegmentedCap = 10'000'000;   // presence-bitmap walk
inline constexpr std::uint64_t kUnitGapCap = 10'000;         // quadratic d_N tabulation
inline constexpr std::uint64_t kMinSegmentBytes = 4'096;

/// mu[i] = number of adjacent pairs of the sorted table differing by exactly
/// i.  Dense: zeros included, last entry positive.  Empty for n = 1.
struct MultiplicityProfile {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> mu;
  std::uint64_t total_entries = 0;  // n^2 values, multiplicity counted

  std::uint64_t max_gap() const { return mu.empty() ? 0 : mu.size() - 1; }
  bool operator==(const MultiplicityProfile&) const = default;
};

struct TableStats {
  std::uint64_t n = 0;
  std::uint64_t m_n = 0;      // distinct values
  std::uint64_t max_gap = 0;
  std::vector<std::uint64_t> isolated;  // gaps with multiplicity exactly 1

  bool operator==(const TableStats&) const = default;
};

/// The multiset {a*b : 1 <= a,b <= n} sorted non-decreasing (n^2 entries).
/// Throws cap_exceeded above naive_cap, pointing at the segmented path.
std::vector<std::uint64_t> sorted_table(std::uint64_t n,
                                        std::uint64_t naive_cap = kDefaultNaiveCap);

MultiplicityProfile gap_profile(std::uint64_t n, std::uint64_t naive_cap = kDefaultNaiveCap);

/// Support of the profile: every gap that occurs at all.  Sorted.
std::vector<std::uint64_t> primitive_gap_set(std::uint64_t n,
                                             std::uint64_t naive_cap = kDefaultNaiveCap);

/// M_N, the number of distinct table values (naive materialization).
std::uint64_t distinct_count(std::uint64_t n, std::uint64_t naive_cap = kDefaultNaiveCap);

/// M_N again, but walking [1, n^2] in presence-bitmap segments of
/// segment_bytes bytes.  Memory stays at segment_bytes + O(1).
std::uint64_t distinct_count_segmented(std::uint64_t n, std::uint64_t segment_bytes);

/// d_N(v): ordered pairs (a, b) in [1, n]^2 with a*b = v.
std::uint64_t representation_count(std::uint64_t n, std::uint64_t v);

/// #{(a,b,c,d) in [1,n]^4 : ab - cd = 1} = sum_v d_N(v) d_N(v+1).
std::uint64_t unit_gap_count(std::uint64_t n);

/// True iff no table value lies strictly between lo and hi.  Both endpoints
/// must be table members (not_in_table otherwise); requires lo < hi <= n^2.
/// O(n) scan, no table materialization.
bool check_interval_primitive(std::uint64_t n, std::uint64_t lo, std::uint64_t hi);

/// Gaps with multiplicity exactly 1, sorted.
std::vector<std::uint64_t> isolated_gaps(std::uint64_t n,
                                         std::uint64_t naive_cap = kDefaultNaiveCap);

TableStats table_stats(std::uint64_t n, std::uint64_t naive_cap = kDefaultNaiveCap);

}  // namespace multitable
