#ifndef FACERING_TESTS_SUPPORT_HPP
#define FACERING_TESTS_SUPPORT_HPP

#include <set>
#include <vector>

#include "facering/complex.hpp"
#include "facering/corpus.hpp"
#include "facering/field.hpp"
#include "oracles.hpp"

namespace testing {

inline std::set<oracle::Mask> faces_of(const facering::SimplicialComplex& c) {
  std::vector<oracle::Mask> facets;
  for (facering::Face f : c.facets()) facets.push_back(f.bits());
  return oracle::all_faces(facets);
}

inline const std::vector<facering::FieldSpec>& small_fields() {
  static const std::vector<facering::FieldSpec> fields = {facering::FieldSpec::rational(), facering::FieldSpec::prime(2),
                                                          facering::FieldSpec::prime(3)};
  return fields;
}

inline std::int64_t oracle_char(facering::FieldSpec f) { return static_cast<std::int64_t>(f.characteristic()); }

inline const facering::SimplicialComplex& cycle3() { return facering::corpus_complex("cycle3"); }
inline const facering::SimplicialComplex& bowtie() { return facering::corpus_complex("bowtie"); }
inline const facering::SimplicialComplex& pair_edges() { return facering::corpus_complex("pair_edges"); }
inline const facering::SimplicialComplex& octahedron() { return facering::corpus_complex("octahedron"); }
inline const facering::SimplicialComplex& rp2_6() { return facering::corpus_complex("rp2_6"); }

}  // namespace testing

#endif  // FACERING_TESTS_SUPPORT_HPP
