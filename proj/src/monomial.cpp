#include "facering/monomial.hpp"

#include <algorithm>

#include "facering/combinatorics.hpp"

namespace facering {

Face ExponentVector::support() const {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] != 0) bits |= std::uint64_t{1} << i;
  }
  return Face(bits);
}

int ExponentVector::total() const {
  int s = 0;
  for (int e : entries) s += e;
  return s;
}

std::string ExponentVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries[i]);
  }
  return s + ")";
}

std::size_t supported_monomial_count(const SimplicialComplex& complex, int degree) {
  if (degree < 0 || complex.is_void()) return 0;
  if (degree == 0) return 1;
  std::size_t count = 0;
  for (int k = 0; k <= complex.dimension(); ++k) {
    count += complex.faces_of_dim(k).size() * static_cast<std::size_t>(binomial(degree - 1, k));
  }
  return count;
}

namespace {

// All ways to write `remaining` as positive parts on vertices[pos..].
void compositions(const std::vector<int>& vertices, std::size_t pos, int remaining, std::vector<int>& current,
                  std::vector<ExponentVector>& out) {
  if (pos + 1 == vertices.size()) {
    current[vertices[pos] - 1] = remaining;
    out.push_back({current});
    current[vertices[pos] - 1] = 0;
    return;
  }
  const int rest = static_cast<int>(vertices.size() - pos - 1);
  for (int e = 1; e <= remaining - rest; ++e) {
    current[vertices[pos] - 1] = e;
    compositions(vertices, pos + 1, remaining - e, current, out);
  }
  current[vertices[pos] - 1] = 0;
}

}  // namespace

std::vector<ExponentVector> supported_monomials(const SimplicialComplex& complex, int degree, std::size_t limit) {
  std::vector<ExponentVector> out;
  if (degree < 0 || complex.is_void()) return out;
  const std::size_t count = supported_monomial_count(complex, degree);
  if (count > limit) {
    throw SizeLimitExceeded("degree-" + std::to_string(degree) + " monomial basis has " + std::to_string(count) +
                            " elements, above the limit of " + std::to_string(limit));
  }
  out.reserve(count);
  std::vector<int> current(complex.n(), 0);
  if (degree == 0) {
    out.push_back({current});
    return out;
  }
  for (int k = 0; k <= complex.dimension() && k < degree; ++k) {
    for (Face f : complex.faces_of_dim(k)) {
      compositions(f.vertices(), 0, degree, current, out);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace facering
