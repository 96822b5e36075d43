#ifndef FACERING_COMBINATORICS_HPP
#define FACERING_COMBINATORICS_HPP

#include <cstdint>

namespace facering {

/// Binomial coefficient with C(a, b) = 0 whenever b < 0 or b > a.
/// For a >= 0 this counts b-subsets of an a-set; negative a yields 0.
constexpr std::int64_t binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  std::int64_t r = 1;
  for (std::int64_t k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

}  // namespace facering

#endif  // FACERING_COMBINATORICS_HPP
