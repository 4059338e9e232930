#include "multitable/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "multitable/gap_theorem.hpp"

namespace multitable {

namespace {

VerifyRow verify_one(std::uint64_t n, const VerifyOptions& options) {
  VerifyRow row;
  row.n = n;

  const GapClassification gc = gap_set(n);
  const MultiplicityProfile profile = gap_profile(n, options.naive_cap);

  std::vector<std::uint64_t> expected;
  expected.reserve(gc.s_max + 1 + gc.b_set.size());
  for (std::uint64_t g = 0; g <= gc.s_max; ++g) expected.push_back(g);
  expected.insert(expected.end(), gc.b_set.begin(), gc.b_set.end());

  std::vector<std::uint64_t> support;
  for (std::uint64_t g = 0; g < profile.mu.size(); ++g)
    if (profile.mu[g] > 0) support.push_back(g);

  row.equivalence_ok = (support == expected);
  if (!row.equivalence_ok) row.details.push_back("gap set differs from the closed form");

  row.b_isolation_ok = true;
  for (std::uint64_t g : gc.b_set) {
    if (g >= profile.mu.size() || profile.mu[g] != 1) {
      row.b_isolation_ok = false;
      row.details.push_back("B gap " + std::to_string(g) + " not isolated");
    }
  }

  row.max_gap_ok = (profile.max_gap() == n);
  if (!row.max_gap_ok)
    row.details.push_back("largest gap is " + std::to_string(profile.max_gap()) +
                          ", expected " + std::to_string(n));

  if (options.check_witnesses) {
    for (std::uint64_t g : expected) {
      const WitnessInterval w = witness_for_gap(n, g);
      bool ok = representation_count(n, w.lo) > 0 && representation_count(n, w.hi) > 0 &&
                w.hi - w.lo == g && w.gap == g;
      if (ok && g > 0) ok = check_interval_primitive(n, w.lo, w.hi);
      if (!ok) {
        row.witnesses_ok = false;
        row.details.push_back("witness for gap " + std::to_string(g) + " invalid (" +
                              std::to_string(w.lo) + ", " + std::to_string(w.hi) + ")");
      }
    }
  }

  if (options.check_mu0) {
    const std::uint64_t distinct = distinct_count(n, options.naive_cap);
    row.mu0_ok = !profile.mu.empty() && profile.mu[0] == n * n - distinct;
    if (!row.mu0_ok) row.details.push_back("mu[0] != n^2 - M_N");
  }

  if (!options.segment_bytes_sizes.empty()) {
    const std::uint64_t naive = distinct_count(n, options.naive_cap);
    for (std::uint64_t bytes : options.segment_bytes_sizes) {
      if (distinct_count_segmented(n, bytes) != naive) {
        row.segmented_ok = false;
        row.details.push_back("segmented count disagrees at segment_bytes = " +
                              std::to_string(bytes));
      }
    }
  }

  // Census data for the open questions; reported, never asserted.
  for (std::uint64_t g = 0; g + 2 <= gc.r && g < profile.mu.size(); ++g)
    if (profile.mu[g] == 1) row.small_isolated_gaps.push_back(g);
  for (const auto& [g, witness] : exceptional_gaps(n)) {
    const std::uint64_t mult = g < profile.mu.size() ? profile.mu[g] : 0;
    if (mult != 1) row.exceptional_multiplicity_anomalies.emplace_back(g, mult);
  }

  return row;
}

}  // namespace

VerifyReport verify_range(std::uint64_t from, std::uint64_t to, const VerifyOptions& options) {
  if (from < 2 || from > to) throw std::domain_error("need 2 <= from <= to");

  VerifyReport report;
  report.from = from;
  report.to = to;
  report.rows.resize(to - from + 1);

  const std::uint64_t count = to - from + 1;
  unsigned threads = std::max(1u, options.threads);
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));

  if (threads == 1) {
    for (std::uint64_t n = from; n <= to; ++n)
      report.rows[n - from] = verify_one(n, options);
  } else {
    std::atomic<std::uint64_t> next{from};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const std::uint64_t n = next.fetch_add(1);
          if (n > to) return;
          try {
            report.rows[n - from] = verify_one(n, options);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& worker : pool) worker.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  for (const VerifyRow& row : report.rows)
    if (!row.ok()) ++report.mismatch_count;
  report.all_pass = (report.mismatch_count == 0);
  return report;
}

}  // namespace multitable
