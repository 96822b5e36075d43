#include <doctest.h>

#include <stdexcept>

#include "facering/singularity.hpp"
#include "support.hpp"

using namespace facering;

namespace {
const FieldSpec kQ = FieldSpec::rational();
const FieldSpec kF2 = FieldSpec::prime(2);
}  // namespace

TEST_CASE("singular faces") {
  CHECK(is_singular_face(testing::bowtie(), Face::of({3}), kQ));
  CHECK_FALSE(is_singular_face(testing::bowtie(), Face::of({1}), kQ));
  CHECK(is_singular_face(testing::pair_edges(), Face(), kQ));
  CHECK_THROWS_AS(is_singular_face(testing::bowtie(), Face::of({1, 4}), kQ), std::invalid_argument);

  const auto report = singularity_report(testing::bowtie(), kQ);
  CHECK(report.singular_faces == std::vector<Face>{Face::of({3})});
  CHECK(report.d == 3);
}

TEST_CASE("singularity dimension") {
  CHECK(singularity_dimension(testing::bowtie(), kQ) == 0);
  CHECK(singularity_dimension(testing::cycle3(), kQ).is_neg_infinity());
  CHECK(singularity_dimension(testing::rp2_6(), kF2) == -1);
  CHECK(singularity_dimension(testing::rp2_6(), kQ).is_neg_infinity());
  CHECK(singularity_dimension(testing::pair_edges(), kQ) == -1);

  CHECK(SingularityDim::neg_infinity() < -1000);
  CHECK(SingularityDim::of(0) < 1);
  CHECK_FALSE(SingularityDim::of(0) < 0);
  CHECK(SingularityDim::neg_infinity().to_string() == "-inf");
}

TEST_CASE("Cohen-Macaulay and Buchsbaum") {
  CHECK(is_cm(testing::octahedron(), kQ));
  CHECK_FALSE(is_cm(testing::bowtie(), kQ));
  CHECK_FALSE(is_cm(testing::rp2_6(), kF2));
  CHECK(is_cm(testing::rp2_6(), kQ));
  CHECK(is_buchsbaum(testing::pair_edges(), kQ));
  CHECK_FALSE(is_buchsbaum(testing::bowtie(), kQ));
  CHECK(is_buchsbaum(testing::octahedron(), kQ));
  CHECK(is_buchsbaum(testing::rp2_6(), kF2));
  // Not pure.
  CHECK_FALSE(is_buchsbaum(SimplicialComplex::from_facets(3, {{1, 2}, {3}}), kQ));
}

TEST_CASE("CM along a face and in codimension c") {
  CHECK(is_cm_along(testing::bowtie(), Face::of({1, 2}), 0, kQ));
  CHECK_FALSE(is_cm_along(testing::bowtie(), Face::of({3}), 1, kQ));
  CHECK_FALSE(is_cm_along(testing::bowtie(), Face::of({1}), 0, kQ));

  CHECK(cm_in_codim(testing::bowtie(), 0, kQ));
  CHECK(cm_in_codim(testing::bowtie(), 1, kQ));
  CHECK_FALSE(cm_in_codim(testing::bowtie(), 2, kQ));
  CHECK_FALSE(cm_in_codim(testing::bowtie(), 3, kQ));
  CHECK(cm_in_codim(testing::octahedron(), 4, kQ));
  CHECK(cm_in_codim(testing::bowtie(), -1, kQ));
}

TEST_CASE("singularity dimension below m iff CM in codimension r - m") {
  for (const auto& e : corpus()) {
    const int r = e.complex.dimension();
    for (FieldSpec field : testing::small_fields()) {
      const SingularityDim s = singularity_dimension(e.complex, field);
      for (int m = 0; m <= r + 1; ++m) {
        CAPTURE(e.name);
        CAPTURE(m);
        CHECK((s < m) == cm_in_codim(e.complex, r - m, field));
      }
    }
  }
}

TEST_CASE("report and predicates are consistent") {
  for (const auto& e : corpus()) {
    for (FieldSpec field : testing::small_fields()) {
      const auto report = singularity_report(e.complex, field);
      int top = -100;
      for (Face f : report.singular_faces) {
        CHECK(is_singular_face(e.complex, f, field));
        top = std::max(top, f.dimension());
      }
      std::size_t singular = 0;
      for (Face f : e.complex.faces()) singular += is_singular_face(e.complex, f, field);
      CHECK(singular == report.singular_faces.size());
      if (report.singular_faces.empty()) CHECK(report.singularity_dimension.is_neg_infinity());
      else CHECK(report.singularity_dimension == top);
      CHECK(report.singularity_dimension == singularity_dimension(e.complex, field));

      if (is_cm(e.complex, field)) CHECK(is_buchsbaum(e.complex, field));
      if (is_buchsbaum(e.complex, field)) {
        CHECK(singularity_dimension(e.complex, field) < 0);
        CHECK(e.complex.is_pure());
      }
      if (e.complex.is_pure()) {
        const int r = e.complex.dimension();
        for (int c = 0; c <= r; ++c) {
          bool all_links_cm = true;
          for (Face f : e.complex.faces_of_dim(r - c)) all_links_cm = all_links_cm && is_cm(e.complex.link(f), field);
          CHECK(cm_in_codim(e.complex, c, field) == all_links_cm);
        }
      }
    }
  }
}
