#include "facering/generic.hpp"

#include <stdexcept>
#include <string>

namespace facering {

std::vector<std::int64_t> GenericCoefficients::column(int p) const {
  std::vector<std::int64_t> out(n);
  for (int t = 1; t <= n; ++t) out[t - 1] = at(t, p);
  return out;
}

ExactMatrix GenericCoefficients::matrix() const {
  ExactMatrix out(field, n, m);
  for (int t = 1; t <= n; ++t) {
    for (int p = 1; p <= m; ++p) out.set(t - 1, p - 1, at(t, p));
  }
  return out;
}

GenericCoefficients GenericCoefficients::leading(int k) const {
  if (k < 0 || k > m) throw std::invalid_argument("leading: asked for " + std::to_string(k) + " of " + std::to_string(m) + " forms");
  GenericCoefficients out{field, n, k, {}, verified};
  out.entries.reserve(static_cast<std::size_t>(n) * k);
  for (int t = 1; t <= n; ++t) {
    for (int p = 1; p <= k; ++p) out.entries.push_back(at(t, p));
  }
  return out;
}

namespace {

// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order;
// stops early when fn returns false.
template <class Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == static_cast<std::size_t>(n - k + i)) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

MinorCheck check_square_minors(const GenericCoefficients& a) {
  MinorCheck result;
  const ExactMatrix full = a.matrix();
  const ExactMatrix full_t = full.transpose();
  const int top = std::min(a.n, a.m);
  for (int k = 1; k <= top && result.all_nonsingular; ++k) {
    for_each_subset(a.n, k, [&](const std::vector<std::size_t>& rows) {
      const ExactMatrix row_block = full_t.select_columns(rows);  // m x k
      return for_each_subset(a.m, k, [&](const std::vector<std::size_t>& cols) {
        ++result.checked;
        const ExactMatrix minor = row_block.transpose().select_columns(cols);
        if (rank(minor) != static_cast<std::size_t>(k)) {
          result.all_nonsingular = false;
          return false;
        }
        return true;
      });
    });
  }
  return result;
}

GenericCoefficients vandermonde(int n, int m, FieldSpec field) {
  GenericCoefficients a{field, n, m, {}, false};
  a.entries.reserve(static_cast<std::size_t>(n) * m);
  for (int t = 1; t <= n; ++t) {
    std::int64_t power = 1;
    for (int p = 1; p <= m; ++p) {
      a.entries.push_back(field.is_rational() ? power : power % field.characteristic());
      power *= t;
    }
  }
  // Distinct positive nodes make every minor positive over Q.
  a.verified = field.is_rational() ? true : check_square_minors(a).all_nonsingular;
  return a;
}

GenericCoefficients sample_generic(int n, int m, FieldSpec field, std::mt19937_64& rng, int attempts) {
  const std::uint64_t span = field.is_rational() ? 2001 : field.characteristic();
  for (int attempt = 0; attempt < attempts; ++attempt) {
    GenericCoefficients a{field, n, m, {}, false};
    a.entries.reserve(static_cast<std::size_t>(n) * m);
    for (int i = 0; i < n * m; ++i) {
      const auto draw = static_cast<std::int64_t>(rng() % span);
      a.entries.push_back(field.is_rational() ? draw - 1000 : draw);
    }
    if (check_square_minors(a).all_nonsingular) {
      a.verified = true;
      return a;
    }
  }
  throw std::runtime_error("no coefficient matrix with all square minors nonsingular found over " +
                           field.to_string() + " after " + std::to_string(attempts) + " attempts");
}

GenericCoefficients make_generic(int n, int m, FieldSpec field, std::uint64_t seed) {
  if (field.is_rational()) return vandermonde(n, m, field);
  std::mt19937_64 rng(seed);
  return sample_generic(n, m, field, rng);
}

}  // namespace facering
