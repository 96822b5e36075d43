#ifndef FACERING_LOCAL_COHOMOLOGY_HPP
#define FACERING_LOCAL_COHOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "facering/cohomology.hpp"
#include "facering/generic.hpp"
#include "facering/hilbert_series.hpp"
#include "facering/monomial.hpp"

namespace facering {

// Local cohomology H^ℓ_m(k[Δ]) realized through Gräbe's ℤⁿ-graded
// description: the piece in degree -U (U ∈ ℕⁿ, s(U) ∈ Δ) is H^{ℓ-1}(Δ|s(U)),
// and x_t acts from -U to -U+e_t by ι*: H^{ℓ-1}(Δ|s(U)) → H^{ℓ-1}(Δ|s(U-e_t)),
// which is the identity when the support does not shrink.

struct LcBlock {
  ExponentVector exponent;  // U; the block sits in ℤⁿ-degree -U
  std::shared_ptr<const CohomologyClassSpace> space;
  std::size_t offset = 0;  // first coordinate of this block in the piece
};

/// H^ℓ_m(k[Δ]) in ℤ-degree -r, as the direct sum over U ∈ V_r.
struct LcGradedPiece {
  int cohomological_degree = 0;
  int magnitude = 0;
  std::vector<LcBlock> blocks;  // lexicographic in U
  std::size_t total_dim = 0;
  std::map<std::vector<int>, std::size_t> block_of;  // U -> index into blocks
};

LcGradedPiece lc_graded_piece(const CohomologyEngine& engine, int l, int r, std::size_t limit = kDefaultBasisLimit);

/// dim H^ℓ_m(k[Δ])_U for U ≤ 0: dim H^{ℓ-1}(Δ|s(U)) if s(U) ∈ Δ, else 0.
std::size_t lc_fine_dim(const CohomologyEngine& engine, int l, const ExponentVector& u);

/// dim H^ℓ_m(k[Δ])_j for j ≤ 0 by the closed binomial formula.
std::size_t lc_coarse_dim(const CohomologyEngine& engine, int l, int j);

/// F(H^i_m(k[Δ]), 1/λ) = Σ_F dim H^{i-1}(Δ|F) λ^{|F|}/(1-λ)^{|F|}, reduced.
HilbertSeries lc_hilbert_series(const CohomologyEngine& engine, int i);

/// Matrix of multiplication by θ = Σ a_t x_t from H^ℓ_m(k[Δ])_{-(i+1)} to H^ℓ_m(k[Δ])_{-i}.
ExactMatrix theta_action_matrix(const CohomologyEngine& engine, int l, int i, std::span<const std::int64_t> theta);

/// Basis (in V_{i+1} block coordinates) of ker^ℓ_{m,i}, the common kernel of
/// θ_1..θ_m on the degree -(i+1) piece.
ExactMatrix kernel_subspace(const CohomologyEngine& engine, int l, int m, int i, const GenericCoefficients& a);

std::size_t kernel_dim_bruteforce(const CohomologyEngine& engine, int l, int m, int i, const GenericCoefficients& a);

/// Σ_F C(i-m, |F|-m-1) dim H^{ℓ-1}(Δ|F) for 0 ≤ m ≤ d, ℓ ≤ d, i ≥ m.
std::size_t kernel_dim_formula(const CohomologyEngine& engine, int l, int m, int i);

/// rank of θ_{m+1} restricted to ker^ℓ_{m,i} (landing in ker^ℓ_{m,i-1}); needs a.m ≥ m+1.
std::size_t surjectivity_rank(const CohomologyEngine& engine, int l, int m, int i, const GenericCoefficients& a);

}  // namespace facering

#endif  // FACERING_LOCAL_COHOMOLOGY_HPP
