#include "facering/artinian.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <string>

namespace facering {

ReductionHilbert reduction_hilbert(const SimplicialComplex& complex, const GenericCoefficients& a, int m, int cutoff,
                                   std::size_t limit) {
  if (m < 0 || m > a.m) {
    throw std::invalid_argument("reduction_hilbert: m = " + std::to_string(m) + " exceeds the " + std::to_string(a.m) +
                                " available forms");
  }
  if (cutoff < 0) throw std::invalid_argument("reduction_hilbert: negative cutoff");
  if (a.n != complex.n()) throw std::invalid_argument("reduction_hilbert: coefficient rows do not match n");

  ReductionHilbert out;
  out.m = m;
  out.coefficients = a;
  if (complex.is_void()) {
    out.dims.assign(cutoff + 1, 0);
    return out;
  }
  std::vector<ExponentVector> previous = supported_monomials(complex, 0, limit);
  out.dims.push_back(previous.size());
  for (int j = 1; j <= cutoff; ++j) {
    std::vector<ExponentVector> current = supported_monomials(complex, j, limit);
    std::map<std::vector<int>, std::size_t> row_of;
    for (std::size_t r = 0; r < current.size(); ++r) row_of.emplace(current[r].entries, r);

    ExactMatrix relations(a.field, current.size(), static_cast<std::size_t>(m) * previous.size());
    std::size_t col = 0;
    for (int p = 1; p <= m; ++p) {
      for (const ExponentVector& mu : previous) {
        std::vector<int> product = mu.entries;
        for (int t = 1; t <= complex.n(); ++t) {
          ++product[t - 1];
          auto it = row_of.find(product);
          if (it != row_of.end()) relations.set(it->second, col, a.at(t, p));
          --product[t - 1];
        }
        ++col;
      }
    }
    out.dims.push_back(current.size() - rank(relations));
    previous = std::move(current);
  }
  return out;
}

DeterminacyResult determinacy_probe(const SimplicialComplex& complex, int m, int trials, int cutoff, FieldSpec field,
                                    std::uint64_t seed) {
  if (trials < 2) throw std::invalid_argument("determinacy_probe: needs at least two trials");
  std::mt19937_64 rng(seed);
  DeterminacyResult result;
  result.constant = true;
  for (int k = 0; k < trials; ++k) {
    const GenericCoefficients a = sample_generic(complex.n(), m, field, rng);
    result.trials.push_back(reduction_hilbert(complex, a, m, cutoff));
    if (result.trials.back().dims != result.trials.front().dims) result.constant = false;
  }
  return result;
}

}  // namespace facering
