#include "facering/cohomology.hpp"

#include <stdexcept>

namespace facering {

std::vector<Face> relative_cochain_faces(const SimplicialComplex& complex, Face tau, int degree) {
  std::vector<Face> out;
  for (Face g : complex.faces_of_dim(degree)) {
    if (tau.is_subset_of(g)) out.push_back(g);
  }
  return out;
}

ExactMatrix relative_coboundary(const SimplicialComplex& complex, Face tau, int degree, FieldSpec field) {
  const auto source = relative_cochain_faces(complex, tau, degree);
  const auto target = relative_cochain_faces(complex, tau, degree + 1);
  ExactMatrix delta(field, target.size(), source.size());
  if (source.empty() || target.empty()) return delta;

  std::map<std::uint64_t, std::size_t> row_of;
  for (std::size_t r = 0; r < target.size(); ++r) row_of.emplace(target[r].bits(), r);
  for (std::size_t c = 0; c < source.size(); ++c) {
    const Face g = source[c];
    for (int v = 1; v <= complex.n(); ++v) {
      if (g.contains(v)) continue;
      const Face coface = g.with(v);
      auto it = row_of.find(coface.bits());
      if (it == row_of.end()) continue;
      delta.set(it->second, c, coface.position_of(v) % 2 == 0 ? 1 : -1);
    }
  }
  return delta;
}

CohomologyClassSpace::CohomologyClassSpace(const SimplicialComplex& complex, Face tau, int degree, FieldSpec field)
    : tau_(tau), degree_(degree), field_(field), cochain_faces_(relative_cochain_faces(complex, tau, degree)) {
  if (!complex.contains(tau)) {
    throw std::invalid_argument("relative cohomology: " + tau.to_string() + " is not a face");
  }
  const ExactMatrix delta_out = relative_coboundary(complex, tau, degree, field);
  const ExactMatrix delta_in = relative_coboundary(complex, tau, degree - 1, field);
  coboundary_image_ = image_basis(delta_in);
  const ExactMatrix cocycles = kernel_basis(delta_out);

  // Greedy extension of the coboundary basis by cocycles.
  const ExactMatrix stacked = coboundary_image_.hconcat(cocycles);
  std::vector<std::size_t> chosen;
  for (std::size_t p : pivot_columns(stacked)) {
    if (p >= coboundary_image_.cols()) chosen.push_back(p - coboundary_image_.cols());
  }
  cocycle_basis_ = cocycles.select_columns(chosen);
  classes_ = std::make_unique<Factorization>(cocycle_basis_.hconcat(coboundary_image_));
}

ExactMatrix CohomologyClassSpace::class_coordinates(const ExactMatrix& cocycles) const {
  if (cocycles.rows() != cochain_faces_.size()) {
    throw std::invalid_argument("class_coordinates: cochain length mismatch");
  }
  auto x = classes_->solve(cocycles);
  if (!x) throw std::logic_error("class_coordinates: input is not a combination of cocycles");
  return x->row_range(0, dim());
}

CohomologyEngine::CohomologyEngine(SimplicialComplex complex, FieldSpec field)
    : complex_(std::move(complex)), field_(field) {}

std::shared_ptr<const CohomologyClassSpace> CohomologyEngine::relative(Face tau, int degree) const {
  if (!complex_.contains(tau)) {
    throw std::invalid_argument("relative cohomology: " + tau.to_string() + " is not a face");
  }
  std::shared_ptr<Slot<std::shared_ptr<const CohomologyClassSpace>>> slot;
  {
    std::lock_guard lock(mutex_);
    auto& s = spaces_[{tau.bits(), degree}];
    if (!s) s = std::make_shared<Slot<std::shared_ptr<const CohomologyClassSpace>>>();
    slot = s;
  }
  std::call_once(slot->once, [&] {
    slot->value = std::make_shared<const CohomologyClassSpace>(complex_, tau, degree, field_);
  });
  return slot->value;
}

std::size_t CohomologyEngine::relative_dim(Face tau, int degree) const { return relative(tau, degree)->dim(); }

const ExactMatrix& CohomologyEngine::induced_map(Face big, Face small, int degree) const {
  if (!small.is_subset_of(big)) {
    throw std::invalid_argument("induced_map: " + small.to_string() + " is not contained in " + big.to_string());
  }
  if (!complex_.contains(big)) {
    throw std::invalid_argument("induced_map: " + big.to_string() + " is not a face");
  }
  std::shared_ptr<Slot<ExactMatrix>> slot;
  {
    std::lock_guard lock(mutex_);
    auto& s = maps_[{big.bits(), small.bits(), degree}];
    if (!s) s = std::make_shared<Slot<ExactMatrix>>();
    slot = s;
  }
  std::call_once(slot->once, [&] { slot->value = compute_induced_map(big, small, degree); });
  return slot->value;
}

ExactMatrix CohomologyEngine::compute_induced_map(Face big, Face small, int degree) const {
  const auto source = relative(big, degree);
  const auto target = relative(small, degree);
  if (big == small) return ExactMatrix::identity(field_, source->dim());

  // Extend each source cocycle by zero from faces ⊇ big to faces ⊇ small.
  const auto& src_faces = source->cochain_faces();
  const auto& dst_faces = target->cochain_faces();
  std::map<std::uint64_t, std::size_t> dst_index;
  for (std::size_t r = 0; r < dst_faces.size(); ++r) dst_index.emplace(dst_faces[r].bits(), r);
  ExactMatrix embed(field_, dst_faces.size(), src_faces.size());
  for (std::size_t c = 0; c < src_faces.size(); ++c) embed.set(dst_index.at(src_faces[c].bits()), c, 1);

  return target->class_coordinates(embed * source->cocycle_basis());
}

std::size_t reduced_cohomology_dim(const SimplicialComplex& complex, int degree, FieldSpec field) {
  const std::size_t cochains = complex.faces_of_dim(degree).size();
  if (cochains == 0) return 0;
  const Face empty;
  const std::size_t out_rank = rank(relative_coboundary(complex, empty, degree, field));
  const std::size_t in_rank = rank(relative_coboundary(complex, empty, degree - 1, field));
  return cochains - out_rank - in_rank;
}

CohomologyClassSpace relative_cohomology(const SimplicialComplex& complex, Face face, int degree, FieldSpec field) {
  return CohomologyClassSpace(complex, face, degree, field);
}

ExactMatrix induced_map(const SimplicialComplex& complex, Face big, Face small, int degree, FieldSpec field) {
  return CohomologyEngine(complex, field).induced_map(big, small, degree);
}

}  // namespace facering
