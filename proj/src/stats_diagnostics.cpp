#include "multitable/stats_diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace multitable {

double alpha_constant() {
  // 1 - (1 + log(log 2))/log 2, natural logarithms
  return 1.0 - (1.0 + std::log(std::log(2.0))) / std::log(2.0);
}

std::vector<FordPoint> ford_table(std::span<const std::uint64_t> n_values,
                                  std::uint64_t naive_cap, std::uint64_t segment_bytes) {
  const double alpha = alpha_constant();
  std::vector<FordPoint> out;
  out.reserve(n_values.size());
  for (std::uint64_t n : n_values) {
    if (n < 3) throw std::domain_error("ford ratio needs n >= 3 (log log n > 0)");
    FordPoint point;
    point.n = n;
    point.m_n = (n <= naive_cap) ? distinct_count(n, naive_cap)
                                 : distinct_count_segmented(n, segment_bytes);
    const double nn = static_cast<double>(n);
    point.ratio = (static_cast<double>(point.m_n) / (nn * nn)) *
                  std::pow(std::log(nn), alpha) * std::pow(std::log(std::log(nn)), 1.5);
    point.alpha = alpha;
    out.push_back(point);
  }
  return out;
}

std::vector<CensusRow> gap_census(std::uint64_t n_from, std::uint64_t n_to,
                                  std::uint64_t oracle_cap) {
  if (n_from < 2 || n_from > n_to || n_to > 100'000)
    throw std::domain_error("census range must satisfy 2 <= from <= to <= 10^5");
  std::vector<CensusRow> rows;
  rows.reserve(n_to - n_from + 1);
  for (std::uint64_t n = n_from; n <= n_to; ++n) {
    const GapClassification gc = gap_set(n);
    CensusRow row;
    row.n = n;
    row.r = gc.r;
    row.t = gc.t;
    row.form = gc.form;
    row.b_count = gc.b_set.size();
    row.b_min = gc.b_set.empty() ? 0 : gc.b_set.front();
    if (n <= oracle_cap) {
      std::vector<std::uint64_t> expected;
      for (std::uint64_t g = 0; g <= gc.s_max; ++g) expected.push_back(g);
      expected.insert(expected.end(), gc.b_set.begin(), gc.b_set.end());
      row.verdict = (primitive_gap_set(n) == expected) ? "match" : "mismatch";
    } else {
      row.verdict = "theory-only";
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace multitable
