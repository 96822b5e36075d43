#include "facering/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "facering/combinatorics.hpp"

namespace facering {

Face Face::of(std::initializer_list<int> vertices) {
  return of(std::span<const int>(vertices.begin(), vertices.size()));
}

Face Face::of(std::span<const int> vertices) {
  std::uint64_t bits = 0;
  for (int v : vertices) {
    if (v < 1 || v > kMaxVertices) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " outside [1, 64]");
    }
    bits |= std::uint64_t{1} << (v - 1);
  }
  return Face(bits);
}

std::vector<int> Face::vertices() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string Face::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int v : vertices()) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

std::strong_ordering operator<=>(Face a, Face b) {
  std::uint64_t x = a.bits(), y = b.bits();
  while (x != 0 && y != 0) {
    int vx = std::countr_zero(x), vy = std::countr_zero(y);
    if (vx != vy) return vx <=> vy;
    x &= x - 1;
    y &= y - 1;
  }
  if (x == 0 && y == 0) return std::strong_ordering::equal;
  return x == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

SimplicialComplex::SimplicialComplex(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [1, 64]");
  }
  build();
}

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<std::vector<int>>& facets) {
  std::vector<Face> gens;
  gens.reserve(facets.size());
  for (const auto& f : facets) {
    for (int v : f) {
      if (v < 1 || v > n) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [1, " +
                                    std::to_string(n) + "]");
      }
    }
    gens.push_back(Face::of(f));
  }
  return from_faces(n, gens);
}

SimplicialComplex SimplicialComplex::from_faces(int n, std::span<const Face> generators) {
  SimplicialComplex c(n);
  const std::uint64_t ground = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<Face> gens(generators.begin(), generators.end());
  for (Face g : gens) {
    if ((g.bits() & ~ground) != 0) {
      throw std::invalid_argument("face " + g.to_string() + " not contained in [1, " +
                                  std::to_string(n) + "]");
    }
  }
  // Larger faces first, so an entry only needs checking against kept ones.
  std::sort(gens.begin(), gens.end(), [](Face a, Face b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  for (Face g : gens) {
    bool absorbed = std::any_of(c.facets_.begin(), c.facets_.end(),
                                [g](Face f) { return g.is_subset_of(f); });
    if (!absorbed) c.facets_.push_back(g);
  }
  std::sort(c.facets_.begin(), c.facets_.end());
  c.build();
  return c;
}

SimplicialComplex SimplicialComplex::empty_face_only(int n) {
  const Face empty;
  return from_faces(n, std::span<const Face>(&empty, 1));
}

void SimplicialComplex::build() {
  std::unordered_set<std::uint64_t> all;
  dim_ = -2;
  for (Face f : facets_) {
    dim_ = std::max(dim_, f.dimension());
    const std::uint64_t top = f.bits();
    for (std::uint64_t s = top;; s = (s - 1) & top) {
      all.insert(s);
      if (s == 0) break;
    }
  }
  by_dim_.assign(dim_ + 2, {});
  for (std::uint64_t bits : all) {
    Face f(bits);
    by_dim_[f.size()].push_back(f);
  }
  index_.clear();
  for (auto& layer : by_dim_) {
    std::sort(layer.begin(), layer.end());
    for (std::size_t i = 0; i < layer.size(); ++i) index_.emplace(layer[i].bits(), i);
  }
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [this](Face f) { return f.dimension() == dim_; });
}

const std::vector<Face>& SimplicialComplex::faces_of_dim(int k) const {
  static const std::vector<Face> none;
  if (k < -1 || k + 1 >= static_cast<int>(by_dim_.size())) return none;
  return by_dim_[k + 1];
}

std::vector<Face> SimplicialComplex::faces() const {
  std::vector<Face> out;
  out.reserve(index_.size());
  for (const auto& layer : by_dim_) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

SimplicialComplex SimplicialComplex::link(Face f) const {
  if (!contains(f)) throw std::invalid_argument("link: " + f.to_string() + " is not a face");
  std::vector<Face> gens;
  for (Face facet : facets_) {
    if (f.is_subset_of(facet)) gens.emplace_back(facet.bits() & ~f.bits());
  }
  return from_faces(n_, gens);
}

SimplicialComplex SimplicialComplex::contrastar(Face f) const {
  if (!contains(f)) throw std::invalid_argument("contrastar: " + f.to_string() + " is not a face");
  if (f.empty()) return SimplicialComplex(n_);
  // Maximal faces avoiding f: facets not containing f, and facets containing
  // f with one vertex of f removed.
  std::vector<Face> gens;
  for (Face facet : facets_) {
    if (!f.is_subset_of(facet)) {
      gens.push_back(facet);
    } else {
      for (int v : f.vertices()) gens.push_back(facet.without(v));
    }
  }
  return from_faces(n_, gens);
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
  if (is_void()) throw std::invalid_argument("f-vector of the void complex");
  std::vector<std::int64_t> f;
  f.reserve(by_dim_.size());
  for (const auto& layer : by_dim_) f.push_back(static_cast<std::int64_t>(layer.size()));
  return f;
}

std::vector<std::int64_t> SimplicialComplex::h_vector() const {
  const auto f = f_vector();
  const int d = dim_ + 1;
  std::vector<std::int64_t> h(d + 1, 0);
  for (int j = 0; j <= d; ++j) {
    for (int i = 0; i <= j; ++i) {
      const std::int64_t sign = (j - i) % 2 == 0 ? 1 : -1;
      h[j] += sign * binomial(d - i, j - i) * f[i];
    }
  }
  return h;
}

}  // namespace facering
