#ifndef FACERING_SINGULARITY_HPP
#define FACERING_SINGULARITY_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "facering/complex.hpp"
#include "facering/field.hpp"

namespace facering {

/// An integer or -∞, where -∞ compares below every integer.
class SingularityDim {
 public:
  static constexpr SingularityDim neg_infinity() { return SingularityDim(); }
  static constexpr SingularityDim of(int v) { return SingularityDim(v); }

  constexpr bool is_neg_infinity() const { return !value_.has_value(); }
  /// Requires !is_neg_infinity().
  constexpr int value() const { return *value_; }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

  friend constexpr bool operator==(const SingularityDim&, const SingularityDim&) = default;
  friend constexpr std::strong_ordering operator<=>(const SingularityDim& a, int b) {
    return a.value_ ? *a.value_ <=> b : std::strong_ordering::less;
  }
  friend constexpr bool operator==(const SingularityDim& a, int b) { return a.value_ == b; }

 private:
  constexpr SingularityDim() = default;
  constexpr explicit SingularityDim(int v) : value_(v) {}
  std::optional<int> value_;
};

struct SingularityReport {
  FieldSpec field;
  std::vector<Face> singular_faces;  // decreasing dimension, lexicographic within a dimension
  SingularityDim singularity_dimension = SingularityDim::neg_infinity();
  int d = 0;  // dim Δ + 1
};

/// True iff H̃^i(lk F; k) ≠ 0 for some i < d - 1 - |F|.
bool is_singular_face(const SimplicialComplex& complex, Face face, FieldSpec field);

SingularityReport singularity_report(const SimplicialComplex& complex, FieldSpec field);
/// Maximum dimension of a singular face; -∞ iff the complex is Cohen–Macaulay.
SingularityDim singularity_dimension(const SimplicialComplex& complex, FieldSpec field);

/// Reisner: no singular faces.
bool is_cm(const SimplicialComplex& complex, FieldSpec field);
/// Schenzel: pure and every nonempty face nonsingular.
bool is_buchsbaum(const SimplicialComplex& complex, FieldSpec field);
/// lk F is Cohen–Macaulay of dimension i.
bool is_cm_along(const SimplicialComplex& complex, Face face, int i, FieldSpec field);
/// CM of dimension c-1 along every face of dimension r-c (r = dim Δ), or
/// c > r+1 and Δ Cohen–Macaulay. For c < 0 there are no such faces and the
/// condition holds vacuously.
bool cm_in_codim(const SimplicialComplex& complex, int c, FieldSpec field);

}  // namespace facering

#endif  // FACERING_SINGULARITY_HPP
