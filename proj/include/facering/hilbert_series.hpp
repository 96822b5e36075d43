#ifndef FACERING_HILBERT_SERIES_HPP
#define FACERING_HILBERT_SERIES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace facering {

/// A rational function p(λ) / (1-λ)^e with integer numerator, kept reduced
/// so that (1-λ) does not divide p unless e = 0. The zero series is p = 0, e = 0.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  /// Reduces on construction.
  HilbertSeries(std::vector<std::int64_t> numerator, int denom_power);

  /// Sum over (coefficient c, exponent s) of c · λ^s / (1-λ)^s.
  static HilbertSeries from_face_terms(const std::vector<std::pair<std::int64_t, int>>& terms);

  const std::vector<std::int64_t>& numerator() const { return numerator_; }
  int denom_power() const { return denom_power_; }
  bool is_zero() const { return numerator_.empty(); }
  /// Order of the pole at λ = 1; 0 for the zero series.
  int pole_order() const { return denom_power_; }
  /// Coefficient of λ^j in the power series expansion at λ = 0.
  std::int64_t coefficient(int j) const;

  std::string to_string() const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

 private:
  void reduce();

  std::vector<std::int64_t> numerator_;  // ascending powers, no trailing zeros
  int denom_power_ = 0;
};

inline int pole_order(const HilbertSeries& s) { return s.pole_order(); }

}  // namespace facering

#endif  // FACERING_HILBERT_SERIES_HPP
