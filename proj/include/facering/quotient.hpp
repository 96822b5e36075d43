#ifndef FACERING_QUOTIENT_HPP
#define FACERING_QUOTIENT_HPP

#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

#include "facering/cohomology.hpp"
#include "facering/matrix.hpp"

namespace facering {

/// Predicted dim H^ℓ_m(k[Δ]/(θ_1..θ_m))_{-i} for generic θ:
/// Σ_F C(i-1, |F|-m-1) dim H^{ℓ+m-1}(Δ|F). Needs 0 ≤ m ≤ d, 1 ≤ ℓ ≤ d-m, i ≥ 1.
std::size_t quotient_lc_dim(const CohomologyEngine& engine, int m, int l, int i);

struct QuotientLcEntry {
  int l = 0;
  int i = 0;
  std::size_t dim = 0;
  friend bool operator==(const QuotientLcEntry&, const QuotientLcEntry&) = default;
};

struct QuotientLcTable {
  int m = 0;
  int d = 0;
  std::vector<QuotientLcEntry> entries;  // ℓ ascending, then i ascending
  friend bool operator==(const QuotientLcTable&, const QuotientLcTable&) = default;
};

/// All cells 1 ≤ ℓ ≤ d-m, 1 ≤ i ≤ max_i.
QuotientLcTable quotient_lc_table(const CohomologyEngine& engine, int m, int max_i);

/// Whether the generic quotient by m forms has finite local cohomology, read
/// off the coefficients of the formula above: every dim H^{ℓ+m-1}(Δ|F) with
/// |F| ≥ m+1 and 1 ≤ ℓ < d-m must vanish.
bool predicts_finite_lc(const CohomologyEngine& engine, int m);

/// f^i = Σ_t a_t ι*: ⊕_t H^i(Δ|{t}) → H^i(Δ|∅). Columns are grouped by
/// vertex in increasing order; vertices outside Δ contribute no columns.
/// Requires isolated singularities, every a_t ≠ 0 and -1 ≤ i ≤ d-1.
ExactMatrix f_map(const CohomologyEngine& engine, int i, std::span<const std::int64_t> theta);

struct IsolatedDims {
  std::size_t negative = 0;  // every degree j < 0
  std::size_t degree_zero = 0;
  std::size_t degree_one = 0;
  friend bool operator==(const IsolatedDims&, const IsolatedDims&) = default;
};

/// Graded dimensions of H^i_m(k[Δ]/(θ)) for isolated singularities and 0 ≤ i < d-1:
/// (0, dim coker f^{i-1} + dim ker f^i, dim H̃^i(Δ)).
IsolatedDims isolated_quotient_dims(const CohomologyEngine& engine, std::span<const std::int64_t> theta, int i);

/// For 0 ≤ i ≤ d-2, the images of H^i(Δ|{t}) in H̃^i(Δ) are independent.
bool is_homologically_isolated(const CohomologyEngine& engine);

}  // namespace facering

#endif  // FACERING_QUOTIENT_HPP
