#include "facering/quotient.hpp"

#include <stdexcept>
#include <string>

#include "facering/combinatorics.hpp"
#include "facering/singularity.hpp"

namespace facering {

namespace {

int krull_dim(const CohomologyEngine& engine) { return engine.complex().dimension() + 1; }

void require_isolated(const CohomologyEngine& engine, const char* what) {
  if (engine.complex().is_void()) throw std::invalid_argument(std::string(what) + ": void complex");
  const SingularityDim s = singularity_dimension(engine.complex(), engine.field());
  if (s > 0) {
    throw std::invalid_argument(std::string(what) + ": singularities are not isolated (singularity dimension " +
                                s.to_string() + ")");
  }
}

}  // namespace

std::size_t quotient_lc_dim(const CohomologyEngine& engine, int m, int l, int i) {
  const int d = krull_dim(engine);
  if (m < 0 || m > d || l < 1 || l > d - m || i < 1) {
    throw std::invalid_argument("quotient_lc_dim: need 0 <= m <= d, 1 <= l <= d-m, i >= 1 (m=" + std::to_string(m) +
                                ", l=" + std::to_string(l) + ", i=" + std::to_string(i) + ", d=" + std::to_string(d) + ")");
  }
  std::size_t total = 0;
  for (Face f : engine.complex().faces()) {
    const auto mult = static_cast<std::size_t>(binomial(i - 1, f.size() - m - 1));
    if (mult != 0) total += mult * engine.relative_dim(f, l + m - 1);
  }
  return total;
}

QuotientLcTable quotient_lc_table(const CohomologyEngine& engine, int m, int max_i) {
  QuotientLcTable table;
  table.m = m;
  table.d = krull_dim(engine);
  if (m < 0 || m > table.d) throw std::invalid_argument("quotient_lc_table: m outside [0, d]");
  for (int l = 1; l <= table.d - m; ++l) {
    for (int i = 1; i <= max_i; ++i) table.entries.push_back({l, i, quotient_lc_dim(engine, m, l, i)});
  }
  return table;
}

bool predicts_finite_lc(const CohomologyEngine& engine, int m) {
  const int d = krull_dim(engine);
  if (m < 0 || m > d) throw std::invalid_argument("predicts_finite_lc: m outside [0, d]");
  for (Face f : engine.complex().faces()) {
    if (f.size() < m + 1) continue;
    for (int l = 1; l < d - m; ++l) {
      if (engine.relative_dim(f, l + m - 1) != 0) return false;
    }
  }
  return true;
}

ExactMatrix f_map(const CohomologyEngine& engine, int i, std::span<const std::int64_t> theta) {
  const SimplicialComplex& c = engine.complex();
  if (theta.size() != static_cast<std::size_t>(c.n())) {
    throw std::invalid_argument("f_map: linear form has " + std::to_string(theta.size()) + " coefficients, expected " +
                                std::to_string(c.n()));
  }
  const auto p = static_cast<std::int64_t>(engine.field().characteristic());
  for (std::size_t t = 0; t < theta.size(); ++t) {
    if (theta[t] == 0 || (p != 0 && theta[t] % p == 0)) {
      throw std::invalid_argument("f_map: coefficient of x_" + std::to_string(t + 1) + " vanishes");
    }
  }
  require_isolated(engine, "f_map");
  if (i < -1 || i > krull_dim(engine) - 1) throw std::invalid_argument("f_map: degree outside [0, d-1]");

  const Face empty;
  const std::size_t target = engine.relative_dim(empty, i);
  std::vector<std::pair<Face, std::int64_t>> sources;
  std::size_t width = 0;
  for (int t = 1; t <= c.n(); ++t) {
    const Face v = Face::vertex(t);
    if (!c.contains(v)) continue;
    sources.emplace_back(v, theta[t - 1]);
    width += engine.relative_dim(v, i);
  }
  ExactMatrix out(engine.field(), target, width);
  std::size_t col = 0;
  for (const auto& [v, a] : sources) {
    const ExactMatrix& block = engine.induced_map(v, empty, i);
    out.add_block(0, col, block, a);
    col += block.cols();
  }
  return out;
}

IsolatedDims isolated_quotient_dims(const CohomologyEngine& engine, std::span<const std::int64_t> theta, int i) {
  const int d = krull_dim(engine);
  if (i < 0 || i >= d - 1) throw std::invalid_argument("isolated_quotient_dims: need 0 <= i < d-1");
  const ExactMatrix before = f_map(engine, i - 1, theta);
  const ExactMatrix at = f_map(engine, i, theta);
  IsolatedDims out;
  out.degree_zero = (before.rows() - rank(before)) + (at.cols() - rank(at));
  out.degree_one = engine.relative_dim(Face(), i);
  return out;
}

bool is_homologically_isolated(const CohomologyEngine& engine) {
  require_isolated(engine, "is_homologically_isolated");
  const SimplicialComplex& c = engine.complex();
  const Face empty;
  for (int i = 0; i <= krull_dim(engine) - 2; ++i) {
    const std::size_t target = engine.relative_dim(empty, i);
    if (target == 0) continue;
    ExactMatrix images(engine.field(), target, 0);
    std::size_t rank_sum = 0;
    for (int t = 1; t <= c.n(); ++t) {
      const Face v = Face::vertex(t);
      if (!c.contains(v)) continue;
      const ExactMatrix& map = engine.induced_map(v, empty, i);
      rank_sum += rank(map);
      images = images.hconcat(map);
    }
    if (rank(images) != rank_sum) return false;
  }
  return true;
}

}  // namespace facering
