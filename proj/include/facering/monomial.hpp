#ifndef FACERING_MONOMIAL_HPP
#define FACERING_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "facering/complex.hpp"

namespace facering {

/// Default cap on the size of any enumerated monomial or V_r basis.
inline constexpr std::size_t kDefaultBasisLimit = 200000;

/// Thrown when a requested basis would exceed the configured size bound.
class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer exponent vector U = (u_1, ..., u_n).
struct ExponentVector {
  std::vector<int> entries;

  /// s(U) = {ℓ : u_ℓ ≠ 0}.
  Face support() const;
  /// |U| = Σ u_ℓ.
  int total() const;
  std::string to_string() const;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
};

/// V_r = {U ∈ ℕ^n : |U| = r, s(U) ∈ Δ}, i.e. the degree-r monomials of the
/// face ring, in lexicographic order on U. Throws SizeLimitExceeded when the
/// count would pass `limit`.
std::vector<ExponentVector> supported_monomials(const SimplicialComplex& complex, int degree,
                                                std::size_t limit = kDefaultBasisLimit);

/// |V_r| without enumerating: Σ_F C(r-1, |F|-1) (and 1 at r = 0).
std::size_t supported_monomial_count(const SimplicialComplex& complex, int degree);

}  // namespace facering

#endif  // FACERING_MONOMIAL_HPP
