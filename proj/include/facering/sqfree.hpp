#ifndef FACERING_SQFREE_HPP
#define FACERING_SQFREE_HPP

#include <cstddef>
#include <map>

#include "facering/complex.hpp"
#include "facering/field.hpp"

namespace facering {

/// Dimensions of a ℤⁿ-graded module in squarefree degrees F ∈ {0,1}ⁿ.
/// Missing keys are zero.
struct SqfreeData {
  int n = 1;
  std::map<Face, std::size_t> dims;

  std::size_t at(Face f) const;
  friend bool operator==(const SqfreeData&, const SqfreeData&) = default;
};

/// k[Δ]: dimension 1 at every face (including ∅).
SqfreeData sqfree_data_of_face_ring(const SimplicialComplex& complex);

/// H^j_m(k[Δ]) in degrees -F: dim H^{j-1}(Δ|F) for F ∈ Δ. Zero entries are omitted.
SqfreeData sqfree_lc_data(const SimplicialComplex& complex, int j, FieldSpec field);

/// dim E_i = Σ_F C(i-1, |F|-1) dim E_F for i ≥ 1, and dim E_∅ at i = 0.
std::size_t sqfree_hilbert(const SqfreeData& e, int i);

/// dim (E/ΘE)_i = Σ_F C(i-m-1, |F|-m-1) dim E_F; requires i > m ≥ 0.
std::size_t sqfree_quotient_hilbert(const SqfreeData& e, int m, int i);

/// Σ_F C(i-1, |F|-m-1) dim H_F, with H the squarefree data of H^{ℓ+m}_m(M); requires i ≥ 1.
std::size_t sqfree_quotient_lc(const SqfreeData& h, int m, int i);

}  // namespace facering

#endif  // FACERING_SQFREE_HPP
