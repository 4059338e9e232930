#include "multitable/asymptotic_order.hpp"

#include <stdexcept>

#include "multitable/int_math.hpp"

namespace multitable {

SymbolicGap SymbolicGap::constant(std::uint64_t value) {
  if (value == 0) throw std::logic_error("constant gaps are positive");
  return {Kind::Constant, value};
}

SymbolicGap SymbolicGap::linear_in_x(std::uint64_t c) {
  // c must be floor(j^2/4) for some j >= 1
  const std::uint64_t j = isqrt(4 * c);
  if (floor_quarter_square(j) != c && floor_quarter_square(j + 1) != c)
    throw std::logic_error("linear gap constant is not of the form floor(j^2/4)");
  return {Kind::LinearInX, c};
}

std::string SymbolicGap::display() const {
  if (kind == Kind::Constant) return std::to_string(c);
  if (c == 0) return "X";
  return "X-" + std::to_string(c);
}

std::strong_ordering cmp_asymptotic(const PairAB& p, const PairAB& q) {
  if (p == q) return std::strong_ordering::equal;
  // larger sum sorts lower; equal sums compare by product
  if (p.sum() != q.sum())
    return p.sum() > q.sum() ? std::strong_ordering::less : std::strong_ordering::greater;
  return p.product() < q.product() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<PairAB> enumerate_descending(std::size_t count) {
  if (count == 0) throw std::domain_error("count must be >= 1");
  std::vector<PairAB> out;
  out.reserve(count);
  for (std::uint64_t j = 0; out.size() < count; ++j) {
    for (std::uint64_t a = j / 2; out.size() < count; --a) {
      out.emplace_back(a, j - a);
      if (a == 0) break;
    }
  }
  return out;
}

SymbolicGap asymptotic_gap(const PairAB& p, const PairAB& q) {
  // same-sum neighbours: p = (a+1, j-a-1), q = (a, j-a)
  if (p.sum() == q.sum() && q.a + 1 == p.a)
    return SymbolicGap::constant(q.sum() - 2 * q.a - 1);
  // block boundary: p = (0, j-1), q = (floor(j/2), ceil(j/2))
  if (p.a == 0 && q.sum() == p.sum() + 1 && q.b - q.a <= 1)
    return SymbolicGap::linear_in_x(q.product());
  throw std::invalid_argument("pairs are not adjacent in the asymptotic enumeration");
}

bool transfer_check(std::uint64_t n, const PairAB& p, const PairAB& q) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  if (p.b > n || q.b > n) throw std::domain_error("pair entries must be <= n");
  const std::uint64_t pp = p.product();
  const std::uint64_t qq = q.product();
  const std::uint64_t spread = pp > qq ? pp - qq : qq - pp;
  if (spread >= n)
    throw std::domain_error("|ab - cd| < n is required for the transfer range");
  const bool table_greater = (n - p.a) * (n - p.b) > (n - q.a) * (n - q.b);
  const bool order_greater = cmp_asymptotic(p, q) == std::strong_ordering::greater;
  return table_greater == order_greater;
}

}  // namespace multitable
