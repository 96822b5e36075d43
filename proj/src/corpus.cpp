#include "facering/corpus.hpp"

#include <stdexcept>

namespace facering {

namespace {

std::vector<std::vector<int>> cross_polytope_boundary() {
  std::vector<std::vector<int>> facets;
  for (int a : {1, 4}) {
    for (int b : {2, 5}) {
      for (int c : {3, 6}) facets.push_back({a, b, c});
    }
  }
  return facets;
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> out;
  out.push_back({"cycle3", SimplicialComplex::from_facets(3, {{1, 2}, {1, 3}, {2, 3}})});
  out.push_back({"bowtie", SimplicialComplex::from_facets(5, {{1, 2, 3}, {3, 4, 5}})});
  out.push_back({"pair_edges", SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}})});
  out.push_back({"octahedron", SimplicialComplex::from_facets(6, cross_polytope_boundary())});
  // Six-vertex triangulation of the real projective plane.
  out.push_back({"rp2_6", SimplicialComplex::from_facets(6, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
                                                              {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}})});
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

const SimplicialComplex& corpus_complex(std::string_view name) {
  for (const CorpusEntry& e : corpus()) {
    if (e.name == name) return e.complex;
  }
  throw std::invalid_argument("unknown corpus complex '" + std::string(name) + "'");
}

}  // namespace facering
