#ifndef FACERING_MATRIX_HPP
#define FACERING_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "facering/detail/dense.hpp"
#include "facering/field.hpp"

namespace facering {

/// Dense matrix with exact entries in a FieldSpec: GMP rationals over Q,
/// residues over F_p. Entries are set from integers; all arithmetic is exact.
///
/// Binary operations require both operands over the same field and throw
/// std::invalid_argument on field or shape mismatch.
class ExactMatrix {
 public:
  ExactMatrix() : ExactMatrix(FieldSpec::rational(), 0, 0) {}
  ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static ExactMatrix identity(FieldSpec field, std::size_t n);
  static ExactMatrix from_rows(FieldSpec field, const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const;
  std::size_t cols() const;
  FieldSpec field() const { return field_; }

  void set(std::size_t r, std::size_t c, std::int64_t value);
  /// Exact textual form of an entry ("-3/2" over Q, a residue over F_p).
  std::string entry(std::size_t r, std::size_t c) const;
  bool is_zero_entry(std::size_t r, std::size_t c) const;
  bool is_zero() const;

  ExactMatrix column_range(std::size_t first, std::size_t count) const;
  ExactMatrix row_range(std::size_t first, std::size_t count) const;
  ExactMatrix select_columns(std::span<const std::size_t> indices) const;
  ExactMatrix transpose() const;
  ExactMatrix hconcat(const ExactMatrix& right) const;
  ExactMatrix vconcat(const ExactMatrix& below) const;
  ExactMatrix scaled(std::int64_t factor) const;
  /// this[r0.., c0..] += factor * block.
  void add_block(std::size_t r0, std::size_t c0, const ExactMatrix& block, std::int64_t factor = 1);

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  using Storage = std::variant<detail::Dense<detail::RationalField>, detail::Dense<detail::PrimeField>>;
  const Storage& storage() const { return storage_; }
  explicit ExactMatrix(FieldSpec field, Storage storage) : field_(field), storage_(std::move(storage)) {}

 private:
  FieldSpec field_;
  Storage storage_;
};

std::size_t rank(const ExactMatrix& m);
/// Columns form a basis of ker m (cols(m) x nullity). Over Q each column is
/// scaled to have integer entries.
ExactMatrix kernel_basis(const ExactMatrix& m);
/// A basis of the column space, chosen among the columns of m.
ExactMatrix image_basis(const ExactMatrix& m);
/// Indices of the columns of m forming the greedy left-to-right basis of its column space.
std::vector<std::size_t> pivot_columns(const ExactMatrix& m);
/// Some x with m * x = b, or nullopt if b is outside the column space.
std::optional<ExactMatrix> solve(const ExactMatrix& m, const ExactMatrix& b);
/// Basis of the intersection of the column spaces of the given matrices.
ExactMatrix subspace_intersection(std::span<const ExactMatrix> bases);
/// dim span(ambient) - dim span(sub); throws std::invalid_argument unless span(sub) ⊆ span(ambient).
std::size_t quotient_dim(const ExactMatrix& ambient, const ExactMatrix& sub);

/// Reduced row echelon factorization T * m = R kept for repeated solves
/// against the same matrix.
class Factorization {
 public:
  explicit Factorization(const ExactMatrix& m);

  std::size_t rank() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Solution of m * x = rhs with free variables zero, nullopt when inconsistent.
  std::optional<ExactMatrix> solve(const ExactMatrix& rhs) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> pivots_;
  ExactMatrix transform_;
};

}  // namespace facering

#endif  // FACERING_MATRIX_HPP
