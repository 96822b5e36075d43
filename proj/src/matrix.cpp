#include "facering/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace facering {

using detail::Dense;
using detail::PrimeField;
using detail::RationalField;

namespace {

// Field arithmetic with a uniform call shape for the templated kernels below.
inline mpq_class add(const RationalField&, const mpq_class& a, const mpq_class& b) { return a + b; }
inline mpq_class sub(const RationalField&, const mpq_class& a, const mpq_class& b) { return a - b; }
inline mpq_class mul(const RationalField&, const mpq_class& a, const mpq_class& b) { return a * b; }
inline mpq_class inv(const RationalField&, const mpq_class& a) { return 1 / a; }
inline std::uint32_t add(const PrimeField& f, std::uint32_t a, std::uint32_t b) { return f.add(a, b); }
inline std::uint32_t sub(const PrimeField& f, std::uint32_t a, std::uint32_t b) { return f.sub(a, b); }
inline std::uint32_t mul(const PrimeField& f, std::uint32_t a, std::uint32_t b) { return f.mul(a, b); }
inline std::uint32_t inv(const PrimeField& f, std::uint32_t a) { return f.inv(a); }

ExactMatrix::Storage make_storage(FieldSpec field, std::size_t rows, std::size_t cols) {
  if (field.is_rational()) return Dense<RationalField>(RationalField{}, rows, cols);
  return Dense<PrimeField>(PrimeField{field.characteristic()}, rows, cols);
}

template <class F>
struct Echelon {
  std::vector<std::size_t> pivots;
  Dense<F> reduced;  // reduced row echelon form; only filled when requested
};

// Gauss-Jordan over F_p. Pivots are searched only in columns < limit.
Echelon<PrimeField> row_reduce(Dense<PrimeField> m, std::size_t limit, bool /*full*/) {
  const PrimeField f = m.field;
  std::vector<std::size_t> pivots;
  std::size_t k = 0;
  for (std::size_t c = 0; c < limit && k < m.rows; ++c) {
    std::size_t r = k;
    while (r < m.rows && m.at(r, c) == 0) ++r;
    if (r == m.rows) continue;
    if (r != k) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(k, j));
    }
    const std::uint32_t scale = f.inv(m.at(k, c));
    for (std::size_t j = c; j < m.cols; ++j) m.at(k, j) = f.mul(m.at(k, j), scale);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == k || m.at(i, c) == 0) continue;
      const std::uint32_t factor = m.at(i, c);
      for (std::size_t j = c; j < m.cols; ++j) {
        if (m.at(k, j) != 0) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(k, j)));
      }
    }
    pivots.push_back(c);
    ++k;
  }
  return {std::move(pivots), std::move(m)};
}

// Over Q: clear denominators row by row, run fraction-free (Bareiss)
// elimination on the integer matrix, then normalize back to RREF if asked.
Echelon<RationalField> row_reduce(const Dense<RationalField>& m, std::size_t limit, bool full) {
  const std::size_t rows = m.rows, cols = m.cols;
  std::vector<mpz_class> z(rows * cols);
  auto Z = [&](std::size_t r, std::size_t c) -> mpz_class& { return z[r * cols + c]; };

  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      const mpz_class& den = m.at(r, c).get_den();
      if (den != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const mpq_class& q = m.at(r, c);
      if (sgn(q) == 0) continue;
      Z(r, c) = q.get_num() * (l / q.get_den());
    }
  }

  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  mpz_class t1, t2;
  std::size_t k = 0;
  for (std::size_t c = 0; c < limit && k < rows; ++c) {
    std::size_t r = k;
    while (r < rows && sgn(Z(r, c)) == 0) ++r;
    if (r == rows) continue;
    if (r != k) {
      for (std::size_t j = 0; j < cols; ++j) mpz_swap(Z(r, j).get_mpz_t(), Z(k, j).get_mpz_t());
    }
    const mpz_class& piv = Z(k, c);
    for (std::size_t i = k + 1; i < rows; ++i) {
      const bool lead_zero = sgn(Z(i, c)) == 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        // Z(i,j) = (piv * Z(i,j) - Z(i,c) * Z(k,j)) / prev, exactly.
        mpz_mul(t1.get_mpz_t(), piv.get_mpz_t(), Z(i, j).get_mpz_t());
        if (!lead_zero && sgn(Z(k, j)) != 0) {
          mpz_mul(t2.get_mpz_t(), Z(i, c).get_mpz_t(), Z(k, j).get_mpz_t());
          mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        }
        if (prev == 1) {
          mpz_swap(Z(i, j).get_mpz_t(), t1.get_mpz_t());
        } else {
          mpz_divexact(Z(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
        }
      }
      Z(i, c) = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++k;
  }

  Echelon<RationalField> out{std::move(pivots), {}};
  if (!full) return out;

  Dense<RationalField> R(RationalField{}, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (sgn(Z(r, c)) != 0) R.at(r, c) = mpq_class(Z(r, c));
    }
  }
  for (std::size_t t = out.pivots.size(); t-- > 0;) {
    const std::size_t pc = out.pivots[t];
    const mpq_class scale = 1 / R.at(t, pc);
    for (std::size_t j = pc; j < cols; ++j) {
      if (sgn(R.at(t, j)) != 0) R.at(t, j) *= scale;
    }
    for (std::size_t s = 0; s < t; ++s) {
      if (sgn(R.at(s, pc)) == 0) continue;
      const mpq_class factor = R.at(s, pc);
      for (std::size_t j = pc; j < cols; ++j) {
        if (sgn(R.at(t, j)) != 0) R.at(s, j) -= factor * R.at(t, j);
      }
    }
  }
  out.reduced = std::move(R);
  return out;
}

template <class F>
Dense<F> kernel_from_rref(const Echelon<F>& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  const std::size_t nullity = cols - e.pivots.size();
  Dense<F> K(e.reduced.field, cols, nullity);
  std::size_t col = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    K.at(free, col) = K.field.from_int(1);
    for (std::size_t t = 0; t < e.pivots.size(); ++t) {
      const auto& v = e.reduced.at(t, free);
      if (!F::is_zero(v)) K.at(e.pivots[t], col) = sub(K.field, K.field.from_int(0), v);
    }
    if constexpr (std::is_same_v<F, RationalField>) {
      mpz_class l = 1;
      for (std::size_t r = 0; r < cols; ++r) {
        const mpz_class& den = K.at(r, col).get_den();
        if (den != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
      }
      if (l != 1) {
        for (std::size_t r = 0; r < cols; ++r) K.at(r, col) *= l;
      }
    }
    ++col;
  }
  return K;
}

template <class F>
Dense<F> multiply(const Dense<F>& a, const Dense<F>& b) {
  Dense<F> out(a.field, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const auto& x = a.at(i, k);
      if (F::is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        const auto& y = b.at(k, j);
        if (!F::is_zero(y)) out.at(i, j) = add(a.field, out.at(i, j), mul(a.field, x, y));
      }
    }
  }
  return out;
}

template <class F>
Dense<F> augment_identity(const Dense<F>& m) {
  Dense<F> aug(m.field, m.rows, m.cols + m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols + r) = m.field.from_int(1);
  }
  return aug;
}

void require_same_field(const ExactMatrix& a, const ExactMatrix& b, const char* what) {
  if (a.field() != b.field()) {
    throw std::invalid_argument(std::string(what) + ": field mismatch (" + a.field().to_string() +
                                " vs " + b.field().to_string() + ")");
  }
}

template <class Fn>
auto visit_pair(const ExactMatrix& a, const ExactMatrix& b, Fn&& fn) {
  return std::visit(
      [&](const auto& x) {
        using D = std::decay_t<decltype(x)>;
        return fn(x, std::get<D>(b.storage()));
      },
      a.storage());
}

}  // namespace

ExactMatrix::ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), storage_(make_storage(field, rows, cols)) {}

ExactMatrix ExactMatrix::identity(FieldSpec field, std::size_t n) {
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ExactMatrix ExactMatrix::from_rows(FieldSpec field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

std::size_t ExactMatrix::rows() const {
  return std::visit([](const auto& d) { return d.rows; }, storage_);
}

std::size_t ExactMatrix::cols() const {
  return std::visit([](const auto& d) { return d.cols; }, storage_);
}

void ExactMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  std::visit([&](auto& d) { d.at(r, c) = d.field.from_int(value); }, storage_);
}

std::string ExactMatrix::entry(std::size_t r, std::size_t c) const {
  return std::visit(
      [&](const auto& d) {
        using F = std::decay_t<decltype(d.field)>;
        return F::to_string(d.at(r, c));
      },
      storage_);
}

bool ExactMatrix::is_zero_entry(std::size_t r, std::size_t c) const {
  return std::visit(
      [&](const auto& d) {
        using F = std::decay_t<decltype(d.field)>;
        return F::is_zero(d.at(r, c));
      },
      storage_);
}

bool ExactMatrix::is_zero() const {
  return std::visit(
      [](const auto& d) {
        using F = std::decay_t<decltype(d.field)>;
        return std::all_of(d.data.begin(), d.data.end(), [](const auto& x) { return F::is_zero(x); });
      },
      storage_);
}

ExactMatrix ExactMatrix::column_range(std::size_t first, std::size_t count) const {
  if (first + count > cols()) throw std::invalid_argument("column_range out of bounds");
  std::vector<std::size_t> idx(count);
  for (std::size_t i = 0; i < count; ++i) idx[i] = first + i;
  return select_columns(idx);
}

ExactMatrix ExactMatrix::row_range(std::size_t first, std::size_t count) const {
  if (first + count > rows()) throw std::invalid_argument("row_range out of bounds");
  return ExactMatrix(field_, std::visit(
                                 [&](const auto& d) -> Storage {
                                   std::decay_t<decltype(d)> out(d.field, count, d.cols);
                                   std::copy(d.data.begin() + first * d.cols,
                                             d.data.begin() + (first + count) * d.cols, out.data.begin());
                                   return out;
                                 },
                                 storage_));
}

ExactMatrix ExactMatrix::select_columns(std::span<const std::size_t> indices) const {
  return ExactMatrix(field_, std::visit(
                                 [&](const auto& d) -> Storage {
                                   std::decay_t<decltype(d)> out(d.field, d.rows, indices.size());
                                   for (std::size_t r = 0; r < d.rows; ++r) {
                                     for (std::size_t j = 0; j < indices.size(); ++j) {
                                       if (indices[j] >= d.cols) {
                                         throw std::invalid_argument("select_columns out of bounds");
                                       }
                                       out.at(r, j) = d.at(r, indices[j]);
                                     }
                                   }
                                   return out;
                                 },
                                 storage_));
}

ExactMatrix ExactMatrix::transpose() const {
  return ExactMatrix(field_, std::visit(
                                 [](const auto& d) -> Storage {
                                   std::decay_t<decltype(d)> out(d.field, d.cols, d.rows);
                                   for (std::size_t r = 0; r < d.rows; ++r) {
                                     for (std::size_t c = 0; c < d.cols; ++c) out.at(c, r) = d.at(r, c);
                                   }
                                   return out;
                                 },
                                 storage_));
}

ExactMatrix ExactMatrix::hconcat(const ExactMatrix& right) const {
  require_same_field(*this, right, "hconcat");
  if (rows() != right.rows()) throw std::invalid_argument("hconcat: row count mismatch");
  ExactMatrix out(field_, rows(), cols() + right.cols());
  out.add_block(0, 0, *this);
  out.add_block(0, cols(), right);
  return out;
}

ExactMatrix ExactMatrix::vconcat(const ExactMatrix& below) const {
  require_same_field(*this, below, "vconcat");
  if (cols() != below.cols()) throw std::invalid_argument("vconcat: column count mismatch");
  ExactMatrix out(field_, rows() + below.rows(), cols());
  out.add_block(0, 0, *this);
  out.add_block(rows(), 0, below);
  return out;
}

ExactMatrix ExactMatrix::scaled(std::int64_t factor) const {
  ExactMatrix out(field_, rows(), cols());
  out.add_block(0, 0, *this, factor);
  return out;
}

void ExactMatrix::add_block(std::size_t r0, std::size_t c0, const ExactMatrix& block, std::int64_t factor) {
  require_same_field(*this, block, "add_block");
  if (r0 + block.rows() > rows() || c0 + block.cols() > cols()) {
    throw std::invalid_argument("add_block out of bounds");
  }
  std::visit(
      [&](auto& d) {
        using D = std::decay_t<decltype(d)>;
        using F = decltype(d.field);
        const auto& b = std::get<D>(block.storage());
        const auto s = d.field.from_int(factor);
        if (F::is_zero(s)) return;
        for (std::size_t r = 0; r < b.rows; ++r) {
          for (std::size_t c = 0; c < b.cols; ++c) {
            const auto& x = b.at(r, c);
            if (F::is_zero(x)) continue;
            auto& y = d.at(r0 + r, c0 + c);
            y = add(d.field, y, mul(d.field, s, x));
          }
        }
      },
      storage_);
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b, "multiply");
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  return ExactMatrix(a.field(), visit_pair(a, b, [](const auto& x, const auto& y) -> ExactMatrix::Storage {
                       return multiply(x, y);
                     }));
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("add: shape mismatch");
  ExactMatrix out = a;
  out.add_block(0, 0, b);
  return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("subtract: shape mismatch");
  ExactMatrix out = a;
  out.add_block(0, 0, b, -1);
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.field() == b.field() && a.storage() == b.storage();
}

std::vector<std::size_t> pivot_columns(const ExactMatrix& m) {
  return std::visit([](const auto& d) { return row_reduce(d, d.cols, false).pivots; }, m.storage());
}

std::size_t rank(const ExactMatrix& m) { return pivot_columns(m).size(); }

ExactMatrix kernel_basis(const ExactMatrix& m) {
  return ExactMatrix(m.field(), std::visit(
                                    [](const auto& d) -> ExactMatrix::Storage {
                                      auto e = row_reduce(d, d.cols, true);
                                      return kernel_from_rref(e, d.cols);
                                    },
                                    m.storage()));
}

ExactMatrix image_basis(const ExactMatrix& m) {
  const auto piv = pivot_columns(m);
  return m.select_columns(piv);
}

std::optional<ExactMatrix> solve(const ExactMatrix& m, const ExactMatrix& b) {
  require_same_field(m, b, "solve");
  if (b.rows() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong row count");
  return Factorization(m).solve(b);
}

ExactMatrix subspace_intersection(std::span<const ExactMatrix> bases) {
  if (bases.empty()) throw std::invalid_argument("subspace_intersection of an empty list");
  ExactMatrix acc = image_basis(bases.front());
  for (std::size_t k = 1; k < bases.size(); ++k) {
    const ExactMatrix& next = bases[k];
    require_same_field(acc, next, "subspace_intersection");
    if (next.rows() != acc.rows()) throw std::invalid_argument("subspace_intersection: ambient dimension mismatch");
    // v = acc * x = next * y  <=>  [acc | next] (x, -y) = 0.
    const ExactMatrix ker = kernel_basis(acc.hconcat(next));
    acc = image_basis(acc * ker.row_range(0, acc.cols()));
  }
  return acc;
}

std::size_t quotient_dim(const ExactMatrix& ambient, const ExactMatrix& sub) {
  require_same_field(ambient, sub, "quotient_dim");
  if (ambient.rows() != sub.rows()) throw std::invalid_argument("quotient_dim: ambient dimension mismatch");
  const std::size_t ra = rank(ambient);
  if (rank(ambient.hconcat(sub)) != ra) {
    throw std::invalid_argument("quotient_dim: subspace is not contained in the ambient space");
  }
  return ra - rank(sub);
}

Factorization::Factorization(const ExactMatrix& m)
    : rows_(m.rows()), cols_(m.cols()), transform_(m.field(), 0, 0) {
  std::visit(
      [&](const auto& d) {
        auto e = row_reduce(augment_identity(d), d.cols, true);
        pivots_ = std::move(e.pivots);
        using D = std::decay_t<decltype(d)>;
        D t(d.field, d.rows, d.rows);
        for (std::size_t r = 0; r < d.rows; ++r) {
          for (std::size_t c = 0; c < d.rows; ++c) t.at(r, c) = e.reduced.at(r, d.cols + c);
        }
        transform_ = ExactMatrix(m.field(), std::move(t));
      },
      m.storage());
}

std::optional<ExactMatrix> Factorization::solve(const ExactMatrix& rhs) const {
  if (rhs.rows() != rows_) throw std::invalid_argument("solve: right-hand side has wrong row count");
  const ExactMatrix y = transform_ * rhs;
  for (std::size_t r = pivots_.size(); r < rows_; ++r) {
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
      if (!y.is_zero_entry(r, c)) return std::nullopt;
    }
  }
  ExactMatrix x(rhs.field(), cols_, rhs.cols());
  for (std::size_t t = 0; t < pivots_.size(); ++t) x.add_block(pivots_[t], 0, y.row_range(t, 1));
  return x;
}

}  // namespace facering
