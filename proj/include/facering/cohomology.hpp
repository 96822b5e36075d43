#ifndef FACERING_COHOMOLOGY_HPP
#define FACERING_COHOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "facering/complex.hpp"
#include "facering/field.hpp"
#include "facering/matrix.hpp"

namespace facering {

/// Coboundary of the relative cochain complex of (Δ, cost τ) in the given
/// degree: rows index faces of dimension degree+1 containing τ, columns faces
/// of dimension degree containing τ (both lexicographic). The cochain dual to
/// G maps to the sum over cofaces G∪{v} with sign (-1)^(position of v in G∪{v}).
/// For τ = ∅ this is the augmented (reduced) cochain complex of Δ.
ExactMatrix relative_coboundary(const SimplicialComplex& complex, Face tau, int degree, FieldSpec field);

/// Faces of dimension `degree` containing τ, in lexicographic order.
std::vector<Face> relative_cochain_faces(const SimplicialComplex& complex, Face tau, int degree);

/// A basis of H^i(Δ, cost τ) given by cocycle representatives.
class CohomologyClassSpace {
 public:
  CohomologyClassSpace(const SimplicialComplex& complex, Face tau, int degree, FieldSpec field);

  Face face() const { return tau_; }
  int degree() const { return degree_; }
  FieldSpec field() const { return field_; }
  std::size_t dim() const { return cocycle_basis_.cols(); }

  /// Relative cochain basis (faces of dimension `degree` containing τ).
  const std::vector<Face>& cochain_faces() const { return cochain_faces_; }
  /// Columns are cocycles, independent modulo coboundaries.
  const ExactMatrix& cocycle_basis() const { return cocycle_basis_; }
  /// Basis of the coboundaries in this degree.
  const ExactMatrix& coboundary_image() const { return coboundary_image_; }

  /// Coordinates (dim x k) of the classes of the k given cocycles in the
  /// cocycle basis. Throws std::logic_error if a column is not a cocycle.
  ExactMatrix class_coordinates(const ExactMatrix& cocycles) const;

 private:
  Face tau_;
  int degree_;
  FieldSpec field_;
  std::vector<Face> cochain_faces_;
  ExactMatrix cocycle_basis_;
  ExactMatrix coboundary_image_;
  std::unique_ptr<Factorization> classes_;  // of [cocycle_basis | coboundary_image]
};

/// Relative cohomology of one complex over one field, with per-key caches.
///
/// Each (τ, degree) space and each induced map is computed exactly once;
/// concurrent callers block on the first computation and then share it.
class CohomologyEngine {
 public:
  CohomologyEngine(SimplicialComplex complex, FieldSpec field);

  const SimplicialComplex& complex() const { return complex_; }
  FieldSpec field() const { return field_; }

  std::shared_ptr<const CohomologyClassSpace> relative(Face tau, int degree) const;
  std::size_t relative_dim(Face tau, int degree) const;

  /// Matrix of ι*: H^i(Δ|big) → H^i(Δ|small) for small ⊆ big, in the two
  /// cocycle bases (rows: target, columns: source).
  const ExactMatrix& induced_map(Face big, Face small, int degree) const;

 private:
  template <class Value>
  struct Slot {
    std::once_flag once;
    Value value;
  };
  using SpaceKey = std::pair<std::uint64_t, int>;
  using MapKey = std::tuple<std::uint64_t, std::uint64_t, int>;

  ExactMatrix compute_induced_map(Face big, Face small, int degree) const;

  SimplicialComplex complex_;
  FieldSpec field_;
  mutable std::mutex mutex_;
  mutable std::map<SpaceKey, std::shared_ptr<Slot<std::shared_ptr<const CohomologyClassSpace>>>> spaces_;
  mutable std::map<MapKey, std::shared_ptr<Slot<ExactMatrix>>> maps_;
};

/// dim H̃^i(Δ; k), computed from coboundary ranks. Zero for the void complex.
std::size_t reduced_cohomology_dim(const SimplicialComplex& complex, int degree, FieldSpec field);

/// Cocycle basis of H^i(Δ, cost F). Throws std::invalid_argument if F ∉ Δ.
CohomologyClassSpace relative_cohomology(const SimplicialComplex& complex, Face face, int degree, FieldSpec field);

ExactMatrix induced_map(const SimplicialComplex& complex, Face big, Face small, int degree, FieldSpec field);

}  // namespace facering

#endif  // FACERING_COHOMOLOGY_HPP
