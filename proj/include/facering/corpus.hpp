#ifndef FACERING_CORPUS_HPP
#define FACERING_CORPUS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "facering/complex.hpp"

namespace facering {

struct CorpusEntry {
  std::string name;
  SimplicialComplex complex;
};

/// The built-in fixtures: cycle3, bowtie, pair_edges, octahedron, rp2_6.
const std::vector<CorpusEntry>& corpus();

/// Throws std::invalid_argument for an unknown name.
const SimplicialComplex& corpus_complex(std::string_view name);

}  // namespace facering

#endif  // FACERING_CORPUS_HPP
