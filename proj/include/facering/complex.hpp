#ifndef FACERING_COMPLEX_HPP
#define FACERING_COMPLEX_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace facering {

/// Largest supported ground set; faces are stored as 64-bit masks.
inline constexpr int kMaxVertices = 64;

/// A subset of the ground set [n], stored as a bitmask (vertex v is bit v-1).
///
/// Faces are totally ordered lexicographically by their ascending vertex
/// lists, so {1} < {1,2} < {1,3} < {2} < {2,3}.
class Face {
 public:
  constexpr Face() = default;
  constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}

  static Face of(std::initializer_list<int> vertices);
  static Face of(std::span<const int> vertices);
  static constexpr Face vertex(int v) { return Face(std::uint64_t{1} << (v - 1)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int dimension() const { return size() - 1; }
  constexpr bool empty() const { return bits_ == 0; }
  /// Highest vertex index present, 0 for the empty face.
  constexpr int max_vertex() const { return 64 - std::countl_zero(bits_); }

  constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1U; }
  constexpr bool is_subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint_from(Face other) const { return (bits_ & other.bits_) == 0; }

  constexpr Face with(int v) const { return Face(bits_ | (std::uint64_t{1} << (v - 1))); }
  constexpr Face without(int v) const { return Face(bits_ & ~(std::uint64_t{1} << (v - 1))); }
  constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
  constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }

  /// Ascending 1-based vertex list.
  std::vector<int> vertices() const;
  /// 0-based position of v among the sorted vertices of this face.
  int position_of(int v) const { return std::popcount(bits_ & ((std::uint64_t{1} << (v - 1)) - 1)); }

  std::string to_string() const;

  friend constexpr bool operator==(Face, Face) = default;
  friend std::strong_ordering operator<=>(Face a, Face b);

 private:
  std::uint64_t bits_ = 0;
};

struct FaceHash {
  std::size_t operator()(Face f) const noexcept { return std::hash<std::uint64_t>{}(f.bits()); }
};

/// A simplicial complex on the ground set [n], generated by its facets.
///
/// The void complex (no faces at all) and the complex {∅} are distinct:
/// the former has an empty facet list, the latter has the single facet ∅.
/// Immutable after construction.
class SimplicialComplex {
 public:
  /// The void complex on [n].
  explicit SimplicialComplex(int n = 1);

  /// Complex generated by the given vertex sets. Contained and duplicate
  /// entries are absorbed. Throws std::invalid_argument on a vertex outside [1, n].
  static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& facets);
  static SimplicialComplex from_faces(int n, std::span<const Face> generators);
  /// The complex {∅} on [n].
  static SimplicialComplex empty_face_only(int n);

  int n() const { return n_; }
  bool is_void() const { return facets_.empty(); }
  /// dim = max facet dimension; -1 for {∅}; -2 for the void complex.
  int dimension() const { return dim_; }
  const std::vector<Face>& facets() const { return facets_; }
  bool is_pure() const;

  bool contains(Face f) const { return index_.contains(f.bits()); }
  /// Faces of dimension k in lexicographic order (k = -1 gives [∅]).
  const std::vector<Face>& faces_of_dim(int k) const;
  /// Position of a face within faces_of_dim(f.dimension()); requires contains(f).
  std::size_t index_of(Face f) const { return index_.at(f.bits()); }
  /// All faces, ordered by dimension then lexicographically.
  std::vector<Face> faces() const;
  std::size_t face_count() const { return index_.size(); }

  SimplicialComplex link(Face f) const;
  SimplicialComplex contrastar(Face f) const;

  /// (f_{-1}, f_0, ..., f_{d-1}). Throws std::invalid_argument for the void complex.
  std::vector<std::int64_t> f_vector() const;
  /// h_j = sum_i (-1)^{j-i} C(d-i, j-i) f_{i-1}.
  std::vector<std::int64_t> h_vector() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_;
  }

 private:
  void build();

  int n_;
  int dim_ = -2;
  std::vector<Face> facets_;
  std::vector<std::vector<Face>> by_dim_;  // by_dim_[k + 1] = faces of dimension k
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace facering

#endif  // FACERING_COMPLEX_HPP
