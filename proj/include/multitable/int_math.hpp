#pragma once

#include <cmath>
#include <cstdint>

namespace multitable {

/// floor(sqrt(n)), exact for the full uint64_t range. A floating-point
/// root seeds the guess; the integer correction decides.
inline std::uint64_t isqrt(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  // sqrt can be off by one in either direction near perfect squares
  while (r > 0 && (unsigned __int128)r * r > n) --r;
  while ((unsigned __int128)(r + 1) * (r + 1) <= n) ++r;
  return r;
}

/// floor(j^2/4) = floor(j/2) * ceil(j/2).
inline std::uint64_t floor_quarter_square(std::uint64_t j) {
  return (j / 2) * (j - j / 2);
}

}  // namespace multitable
