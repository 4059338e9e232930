#pragma once

#include <stdexcept>
#include <string>

namespace multitable {

// Thrown when a brute-force path is asked to exceed its configured size cap.
// CLI maps this to exit status 3.
struct cap_exceeded : std::runtime_error {
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Requested gap is not in S_N ∪ B_N.
struct not_a_gap : std::domain_error {
  explicit not_a_gap(const std::string& what) : std::domain_error(what) {}
};

// Interval endpoint is not a member of the N×N table.
struct not_in_table : std::domain_error {
  explicit not_in_table(const std::string& what) : std::domain_error(what) {}
};

}  // namespace multitable
