#include "facering/sqfree.hpp"

#include <stdexcept>
#include <string>

#include "facering/cohomology.hpp"
#include "facering/combinatorics.hpp"

namespace facering {

std::size_t SqfreeData::at(Face f) const {
  auto it = dims.find(f);
  return it == dims.end() ? 0 : it->second;
}

SqfreeData sqfree_data_of_face_ring(const SimplicialComplex& complex) {
  if (complex.is_void()) throw std::invalid_argument("sqfree_data_of_face_ring: void complex");
  SqfreeData out;
  out.n = complex.n();
  for (Face f : complex.faces()) out.dims.emplace(f, 1);
  return out;
}

SqfreeData sqfree_lc_data(const SimplicialComplex& complex, int j, FieldSpec field) {
  if (j > complex.dimension() + 1) throw std::invalid_argument("sqfree_lc_data: degree exceeds d");
  SqfreeData out;
  out.n = complex.n();
  CohomologyEngine engine(complex, field);
  for (Face f : complex.faces()) {
    const std::size_t dim = engine.relative_dim(f, j - 1);
    if (dim != 0) out.dims.emplace(f, dim);
  }
  return out;
}

std::size_t sqfree_hilbert(const SqfreeData& e, int i) {
  if (i < 0) throw std::invalid_argument("sqfree_hilbert: negative degree");
  if (i == 0) return e.at(Face());
  std::size_t total = 0;
  for (const auto& [f, dim] : e.dims) total += static_cast<std::size_t>(binomial(i - 1, f.size() - 1)) * dim;
  return total;
}

std::size_t sqfree_quotient_hilbert(const SqfreeData& e, int m, int i) {
  if (m < 0 || i <= m) {
    throw std::invalid_argument("sqfree_quotient_hilbert: need i > m >= 0 (m=" + std::to_string(m) +
                                ", i=" + std::to_string(i) + ")");
  }
  std::size_t total = 0;
  for (const auto& [f, dim] : e.dims) total += static_cast<std::size_t>(binomial(i - m - 1, f.size() - m - 1)) * dim;
  return total;
}

std::size_t sqfree_quotient_lc(const SqfreeData& h, int m, int i) {
  if (m < 0 || i < 1) throw std::invalid_argument("sqfree_quotient_lc: need m >= 0 and i >= 1");
  std::size_t total = 0;
  for (const auto& [f, dim] : h.dims) total += static_cast<std::size_t>(binomial(i - 1, f.size() - m - 1)) * dim;
  return total;
}

}  // namespace facering
