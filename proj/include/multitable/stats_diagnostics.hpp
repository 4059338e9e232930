#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "multitable/gap_theorem.hpp"
#include "multitable/table_oracle.hpp"

namespace multitable {

// Report-grade diagnostics around the multiplication table problem: the
// density ratio M_N/N^2 rescaled by the Ford normalization, and aggregate
// tables of the closed-form data over ranges of N.

/// One row of the Ford diagnostic.  The ratio is bounded between unknown
/// constants; nothing here asserts a value, we only report it.
struct FordPoint {
  std::uint64_t n = 0;
  std::uint64_t m_n = 0;
  double ratio = 0.0;  // (M_N/N^2) (log N)^alpha (log log N)^(3/2)
  double alpha = 0.0;

  bool operator==(const FordPoint&) const = default;
};

struct CensusRow {
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  std::uint64_t t = 0;
  NForm form;
  std::uint64_t b_count = 0;
  std::uint64_t b_min = 0;  // 0 when B_N is empty
  std::string verdict;      // "match", "mismatch", or "theory-only"

  bool operator==(const CensusRow&) const = default;
};

/// alpha = 1 - (1 + log(log 2))/log 2 = 0.08607..., from the closed form.
double alpha_constant();

/// One FordPoint per n (each n >= 3).  Uses the naive distinct count up to
/// naive_cap and the segmented walk beyond it.
std::vector<FordPoint> ford_table(std::span<const std::uint64_t> n_values,
                                  std::uint64_t naive_cap = kDefaultNaiveCap,
                                  std::uint64_t segment_bytes = 1 << 20);

/// Per-N closed-form summary over [n_from, n_to] (bounds in [2, 10^5]).
/// The oracle verdict is computed for n <= oracle_cap, "theory-only" above.
std::vector<CensusRow> gap_census(std::uint64_t n_from, std::uint64_t n_to,
                                  std::uint64_t oracle_cap = 256);

}  // namespace multitable
