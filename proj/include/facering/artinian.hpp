#ifndef FACERING_ARTINIAN_HPP
#define FACERING_ARTINIAN_HPP

#include <cstdint>
#include <vector>

#include "facering/complex.hpp"
#include "facering/generic.hpp"
#include "facering/monomial.hpp"

namespace facering {

/// Hilbert function of k[Δ]/(θ_1..θ_m) in degrees 0..cutoff.
struct ReductionHilbert {
  int m = 0;
  std::vector<std::size_t> dims;
  GenericCoefficients coefficients;
  friend bool operator==(const ReductionHilbert&, const ReductionHilbert&) = default;
};

/// dims[j] = |V_j| - rank of {x_t μ · a_{t,p} summed over t : p ≤ m, μ ∈ V_{j-1}},
/// where x_t μ is dropped when its support is not a face.
ReductionHilbert reduction_hilbert(const SimplicialComplex& complex, const GenericCoefficients& a, int m, int cutoff,
                                   std::size_t limit = kDefaultBasisLimit);

struct DeterminacyResult {
  bool constant = false;
  std::vector<ReductionHilbert> trials;
};

/// Runs reduction_hilbert with `trials` independently sampled verified-generic
/// coefficient matrices and reports whether the Hilbert functions coincide.
DeterminacyResult determinacy_probe(const SimplicialComplex& complex, int m, int trials, int cutoff, FieldSpec field,
                                    std::uint64_t seed);

}  // namespace facering

#endif  // FACERING_ARTINIAN_HPP
