#include "facering/local_cohomology.hpp"

#include <stdexcept>
#include <string>

#include "facering/combinatorics.hpp"

namespace facering {

namespace {

ExactMatrix theta_between(const CohomologyEngine& engine, const LcGradedPiece& from, const LcGradedPiece& to,
                          std::span<const std::int64_t> theta) {
  const int l = from.cohomological_degree;
  ExactMatrix out(engine.field(), to.total_dim, from.total_dim);
  for (const LcBlock& src : from.blocks) {
    if (src.space->dim() == 0) continue;
    const Face big = src.exponent.support();
    std::vector<int> lower = src.exponent.entries;
    for (int t : big.vertices()) {
      const std::int64_t a = theta[t - 1];
      if (a == 0) continue;
      --lower[t - 1];
      const LcBlock& dst = to.blocks[to.block_of.at(lower)];
      ++lower[t - 1];
      if (dst.space->dim() == 0) continue;
      out.add_block(dst.offset, src.offset, engine.induced_map(big, dst.exponent.support(), l - 1), a);
    }
  }
  return out;
}

void require_theta_length(const CohomologyEngine& engine, std::size_t length) {
  if (length != static_cast<std::size_t>(engine.complex().n())) {
    throw std::invalid_argument("linear form has " + std::to_string(length) + " coefficients, expected " +
                                std::to_string(engine.complex().n()));
  }
}

}  // namespace

LcGradedPiece lc_graded_piece(const CohomologyEngine& engine, int l, int r, std::size_t limit) {
  LcGradedPiece piece;
  piece.cohomological_degree = l;
  piece.magnitude = r;
  for (ExponentVector& u : supported_monomials(engine.complex(), r, limit)) {
    auto space = engine.relative(u.support(), l - 1);
    piece.block_of.emplace(u.entries, piece.blocks.size());
    const std::size_t dim = space->dim();
    piece.blocks.push_back({std::move(u), std::move(space), piece.total_dim});
    piece.total_dim += dim;
  }
  return piece;
}

std::size_t lc_fine_dim(const CohomologyEngine& engine, int l, const ExponentVector& u) {
  if (u.entries.size() != static_cast<std::size_t>(engine.complex().n())) {
    throw std::invalid_argument("exponent vector has wrong length");
  }
  for (int e : u.entries) {
    if (e > 0) throw std::invalid_argument("lc_fine_dim: degree " + u.to_string() + " has a positive entry");
  }
  const Face s = u.support();
  if (!engine.complex().contains(s)) return 0;
  return engine.relative_dim(s, l - 1);
}

std::size_t lc_coarse_dim(const CohomologyEngine& engine, int l, int j) {
  if (j > 0) throw std::invalid_argument("lc_coarse_dim: positive degree " + std::to_string(j));
  const SimplicialComplex& c = engine.complex();
  if (c.is_void()) return 0;
  const int r = -j;
  if (r == 0) return engine.relative_dim(Face(), l - 1);
  std::size_t total = 0;
  for (int k = 0; k <= c.dimension(); ++k) {
    const auto mult = static_cast<std::size_t>(binomial(r - 1, k));
    if (mult == 0) continue;
    for (Face f : c.faces_of_dim(k)) total += mult * engine.relative_dim(f, l - 1);
  }
  return total;
}

HilbertSeries lc_hilbert_series(const CohomologyEngine& engine, int i) {
  std::vector<std::pair<std::int64_t, int>> terms;
  for (Face f : engine.complex().faces()) {
    const auto dim = static_cast<std::int64_t>(engine.relative_dim(f, i - 1));
    if (dim != 0) terms.emplace_back(dim, f.size());
  }
  return HilbertSeries::from_face_terms(terms);
}

ExactMatrix theta_action_matrix(const CohomologyEngine& engine, int l, int i, std::span<const std::int64_t> theta) {
  if (i < 0) throw std::invalid_argument("theta_action_matrix: negative degree index");
  require_theta_length(engine, theta.size());
  const LcGradedPiece from = lc_graded_piece(engine, l, i + 1);
  const LcGradedPiece to = lc_graded_piece(engine, l, i);
  return theta_between(engine, from, to, theta);
}

ExactMatrix kernel_subspace(const CohomologyEngine& engine, int l, int m, int i, const GenericCoefficients& a) {
  if (m < 0 || m > a.m) {
    throw std::invalid_argument("kernel_subspace: m = " + std::to_string(m) + " outside [0, " + std::to_string(a.m) + "]");
  }
  if (i < 0) throw std::invalid_argument("kernel_subspace: negative degree index");
  require_theta_length(engine, static_cast<std::size_t>(a.n));
  const LcGradedPiece from = lc_graded_piece(engine, l, i + 1);
  if (m == 0) return ExactMatrix::identity(engine.field(), from.total_dim);
  const LcGradedPiece to = lc_graded_piece(engine, l, i);
  std::vector<ExactMatrix> kernels;
  kernels.reserve(m);
  for (int p = 1; p <= m; ++p) {
    const auto theta = a.column(p);
    kernels.push_back(kernel_basis(theta_between(engine, from, to, theta)));
  }
  return subspace_intersection(kernels);
}

std::size_t kernel_dim_bruteforce(const CohomologyEngine& engine, int l, int m, int i, const GenericCoefficients& a) {
  return kernel_subspace(engine, l, m, i, a).cols();
}

std::size_t kernel_dim_formula(const CohomologyEngine& engine, int l, int m, int i) {
  const SimplicialComplex& c = engine.complex();
  const int d = c.dimension() + 1;
  if (m < 0 || m > d || l > d || i < m) {
    throw std::invalid_argument("kernel_dim_formula: need 0 <= m <= d, l <= d, i >= m (m=" + std::to_string(m) +
                                ", l=" + std::to_string(l) + ", i=" + std::to_string(i) + ", d=" + std::to_string(d) + ")");
  }
  std::size_t total = 0;
  for (Face f : c.faces()) {
    const auto mult = static_cast<std::size_t>(binomial(i - m, f.size() - m - 1));
    if (mult != 0) total += mult * engine.relative_dim(f, l - 1);
  }
  return total;
}

std::size_t surjectivity_rank(const CohomologyEngine& engine, int l, int m, int i, const GenericCoefficients& a) {
  if (a.m < m + 1) throw std::invalid_argument("surjectivity_rank: needs at least m+1 linear forms");
  if (i < m + 1) throw std::invalid_argument("surjectivity_rank: needs i >= m+1");
  const ExactMatrix kernel = kernel_subspace(engine, l, m, i, a);
  const auto theta = a.column(m + 1);
  return rank(theta_action_matrix(engine, l, i, theta) * kernel);
}

}  // namespace facering
