#include "multitable/table_oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "multitable/errors.hpp"
#include "multitable/gap_theorem.hpp"
#include "multitable/int_math.hpp"

namespace multitable {

namespace {

void require_positive(std::uint64_t n) {
  if (n == 0) throw std::domain_error("n must be >= 1");
  if (n > kMaxTableSide) throw std::domain_error("n exceeds the 2^32-1 width cap");
}

void require_naive(std::uint64_t n, std::uint64_t naive_cap) {
  require_positive(n);
  if (n > naive_cap)
    throw cap_exceeded("n = " + std::to_string(n) + " exceeds the naive cap " +
                       std::to_string(naive_cap) +
                       "; use the segmented operations for distinct counts");
}

}  // namespace

std::vector<std::uint64_t> sorted_table(std::uint64_t n, std::uint64_t naive_cap) {
  require_naive(n, naive_cap);
  std::vector<std::uint64_t> values;
  values.reserve(n * n);
  for (std::uint64_t a = 1; a <= n; ++a)
    for (std::uint64_t b = 1; b <= n; ++b) values.push_back(a * b);
  std::sort(values.begin(), values.end());
  return values;
}

MultiplicityProfile gap_profile(std::uint64_t n, std::uint64_t naive_cap) {
  const std::vector<std::uint64_t> values = sorted_table(n, naive_cap);
  MultiplicityProfile p;
  p.n = n;
  p.total_entries = n * n;
  if (values.size() < 2) return p;  // n = 1: no adjacent pairs
  std::uint64_t max_gap = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    max_gap = std::max(max_gap, values[i] - values[i - 1]);
  p.mu.assign(max_gap + 1, 0);
  for (std::size_t i = 1; i < values.size(); ++i) ++p.mu[values[i] - values[i - 1]];
  return p;
}

std::vector<std::uint64_t> primitive_gap_set(std::uint64_t n, std::uint64_t naive_cap) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  const MultiplicityProfile p = gap_profile(n, naive_cap);
  std::vector<std::uint64_t> support;
  for (std::uint64_t g = 0; g < p.mu.size(); ++g)
    if (p.mu[g] > 0) support.push_back(g);
  return support;
}

std::uint64_t distinct_count(std::uint64_t n, std::uint64_t naive_cap) {
  const std::vector<std::uint64_t> values = sorted_table(n, naive_cap);
  std::uint64_t distinct = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (i == 0 || values[i] != values[i - 1]) ++distinct;
  return distinct;
}

std::uint64_t distinct_count_segmented(std::uint64_t n, std::uint64_t segment_bytes) {
  require_positive(n);
  if (n > kSegmentedCap)
    throw cap_exceeded("n exceeds the segmented cap " + std::to_string(kSegmentedCap));
  if (segment_bytes < kMinSegmentBytes)
    throw std::domain_error("segment_bytes must be >= " + std::to_string(kMinSegmentBytes));

  const std::uint64_t total = n * n;  // values live in [1, n^2]
  const std::uint64_t segment_bits = segment_bytes * 8;
  std::vector<std::uint64_t> bitmap(segment_bits / 64);
  std::uint64_t count = 0;

  for (std::uint64_t lo = 1; lo <= total; lo += segment_bits) {
    const std::uint64_t hi = std::min(lo + segment_bits - 1, total);  // inclusive
    std::fill(bitmap.begin(), bitmap.end(), 0);
    for (std::uint64_t a = 1; a <= n; ++a) {
      if (a * n < lo) continue;          // whole row below this segment
      std::uint64_t b = (lo + a - 1) / a;  // first cofactor with a*b >= lo
      if (b < 1) b = 1;
      const std::uint64_t b_end = std::min(n, hi / a);
      if (b > b_end) continue;             // row starts after the segment
      for (std::uint64_t v = a * b; b <= b_end; ++b, v += a) {
        const std::uint64_t bit = v - lo;
        bitmap[bit >> 6] |= 1ull << (bit & 63);
      }
    }
    for (std::uint64_t word : bitmap) count += std::popcount(word);
  }
  return count;
}

std::uint64_t representation_count(std::uint64_t n, std::uint64_t v) {
  require_positive(n);
  if (v == 0) throw std::domain_error("v must be >= 1");
  std::uint64_t count = 0;
  for (std::uint64_t d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    const std::uint64_t q = v / d;
    if (d > n || q > n) continue;
    count += (d == q) ? 1 : 2;
  }
  return count;
}

std::uint64_t unit_gap_count(std::uint64_t n) {
  require_positive(n);
  if (n > kUnitGapCap)
    throw cap_exceeded("n exceeds the unit-gap cap " + std::to_string(kUnitGapCap));
  // tabulate d_N over [1, n^2] in one quadratic pass
  std::vector<std::uint32_t> reps(n * n + 2, 0);
  for (std::uint64_t a = 1; a <= n; ++a)
    for (std::uint64_t b = 1; b <= n; ++b) ++reps[a * b];
  std::uint64_t count = 0;
  for (std::uint64_t v = 1; v < n * n; ++v)
    count += static_cast<std::uint64_t>(reps[v]) * reps[v + 1];
  return count;
}

bool check_interval_primitive(std::uint64_t n, std::uint64_t lo, std::uint64_t hi) {
  require_positive(n);
  if (!(1 <= lo && lo < hi && hi <= n * n))
    throw std::domain_error("need 1 <= lo < hi <= n^2");
  if (representation_count(n, lo) == 0)
    throw not_in_table("lo = " + std::to_string(lo) + " is not in the table");
  if (representation_count(n, hi) == 0)
    throw not_in_table("hi = " + std::to_string(hi) + " is not in the table");
  for (std::uint64_t a = 1; a <= n; ++a) {
    const std::uint64_t next_multiple = (lo / a + 1) * a;  // smallest multiple of a > lo
    if (next_multiple < hi && next_multiple <= a * n) return false;
  }
  return true;
}

std::vector<std::uint64_t> isolated_gaps(std::uint64_t n, std::uint64_t naive_cap) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  const MultiplicityProfile p = gap_profile(n, naive_cap);
  std::vector<std::uint64_t> out;
  for (std::uint64_t g = 0; g < p.mu.size(); ++g)
    if (p.mu[g] == 1) out.push_back(g);
  return out;
}

TableStats table_stats(std::uint64_t n, std::uint64_t naive_cap) {
  const MultiplicityProfile p = gap_profile(n, naive_cap);
  TableStats s;
  s.n = n;
  s.max_gap = p.max_gap();
  s.m_n = p.mu.empty() ? 1 : p.total_entries - p.mu[0];
  for (std::uint64_t g = 0; g < p.mu.size(); ++g)
    if (p.mu[g] == 1) s.isolated.push_back(g);
  return s;
}

}  // namespace multitable
