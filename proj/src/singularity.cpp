#include "facering/singularity.hpp"

#include <stdexcept>

#include "facering/cohomology.hpp"

namespace facering {

bool is_singular_face(const SimplicialComplex& complex, Face face, FieldSpec field) {
  if (!complex.contains(face)) {
    throw std::invalid_argument("is_singular_face: " + face.to_string() + " is not a face");
  }
  const int d = complex.dimension() + 1;
  const SimplicialComplex lk = complex.link(face);
  for (int i = -1; i < d - 1 - face.size(); ++i) {
    if (reduced_cohomology_dim(lk, i, field) != 0) return true;
  }
  return false;
}

SingularityReport singularity_report(const SimplicialComplex& complex, FieldSpec field) {
  SingularityReport report{field, {}, SingularityDim::neg_infinity(), complex.dimension() + 1};
  for (int k = complex.dimension(); k >= -1; --k) {
    for (Face f : complex.faces_of_dim(k)) {
      if (is_singular_face(complex, f, field)) report.singular_faces.push_back(f);
    }
    if (!report.singular_faces.empty() && report.singularity_dimension.is_neg_infinity()) {
      report.singularity_dimension = SingularityDim::of(k);
    }
  }
  return report;
}

SingularityDim singularity_dimension(const SimplicialComplex& complex, FieldSpec field) {
  for (int k = complex.dimension(); k >= -1; --k) {
    for (Face f : complex.faces_of_dim(k)) {
      if (is_singular_face(complex, f, field)) return SingularityDim::of(k);
    }
  }
  return SingularityDim::neg_infinity();
}

bool is_cm(const SimplicialComplex& complex, FieldSpec field) {
  return singularity_dimension(complex, field).is_neg_infinity();
}

bool is_buchsbaum(const SimplicialComplex& complex, FieldSpec field) {
  if (!complex.is_pure()) return false;
  for (int k = complex.dimension(); k >= 0; --k) {
    for (Face f : complex.faces_of_dim(k)) {
      if (is_singular_face(complex, f, field)) return false;
    }
  }
  return true;
}

bool is_cm_along(const SimplicialComplex& complex, Face face, int i, FieldSpec field) {
  const SimplicialComplex lk = complex.link(face);
  return lk.dimension() == i && is_cm(lk, field);
}

bool cm_in_codim(const SimplicialComplex& complex, int c, FieldSpec field) {
  const int r = complex.dimension();
  if (c > r + 1) return is_cm(complex, field);
  for (Face f : complex.faces_of_dim(r - c)) {
    if (!is_cm_along(complex, f, c - 1, field)) return false;
  }
  return true;
}

}  // namespace facering
