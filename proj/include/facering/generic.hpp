#ifndef FACERING_GENERIC_HPP
#define FACERING_GENERIC_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "facering/field.hpp"
#include "facering/matrix.hpp"

namespace facering {

/// Coefficients a_{t,p} of linear forms θ_p = Σ_t a_{t,p} x_t, t ∈ [n], p ∈ [m].
/// Entries are integers (residues in [0, p) over F_p).
struct GenericCoefficients {
  FieldSpec field;
  int n = 0;
  int m = 0;
  std::vector<std::int64_t> entries;  // row-major n x m
  bool verified = false;              // every square submatrix nonsingular

  std::int64_t at(int t, int p) const { return entries[static_cast<std::size_t>(t - 1) * m + (p - 1)]; }
  /// Coefficients of θ_p indexed by t - 1.
  std::vector<std::int64_t> column(int p) const;
  ExactMatrix matrix() const;
  /// The first k forms.
  GenericCoefficients leading(int k) const;

  friend bool operator==(const GenericCoefficients&, const GenericCoefficients&) = default;
};

struct MinorCheck {
  bool all_nonsingular = true;
  std::size_t checked = 0;
};

/// Tests every square submatrix of every size 1..min(n, m); stops at the first singular one.
MinorCheck check_square_minors(const GenericCoefficients& a);

/// a_{t,p} = t^(p-1).
GenericCoefficients vandermonde(int n, int m, FieldSpec field);

/// Uniform sample with explicit minor verification, retried up to `attempts`
/// times. Over Q entries are drawn from [-1000, 1000]. Throws
/// std::runtime_error when no verified matrix is found.
GenericCoefficients sample_generic(int n, int m, FieldSpec field, std::mt19937_64& rng, int attempts = 64);

/// Over Q the Vandermonde matrix (totally positive, so verified without
/// search); over F_p a seeded verified sample.
GenericCoefficients make_generic(int n, int m, FieldSpec field, std::uint64_t seed = 0);

}  // namespace facering

#endif  // FACERING_GENERIC_HPP
