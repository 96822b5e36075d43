#include <doctest.h>

#include <stdexcept>

#include "facering/artinian.hpp"
#include "facering/singularity.hpp"
#include "facering/sqfree.hpp"
#include "support.hpp"

using namespace facering;

namespace {
const FieldSpec kQ = FieldSpec::rational();
const FieldSpec kP = FieldSpec::prime(32003);
using Dims = std::vector<std::size_t>;
}  // namespace

TEST_CASE("reduction Hilbert functions") {
  const auto& c = testing::cycle3();
  const auto a = make_generic(3, 3, kQ);
  CHECK(reduction_hilbert(c, a, 1, 4).dims == Dims{1, 2, 3, 3, 3});
  CHECK(reduction_hilbert(c, a, 2, 4).dims == Dims{1, 1, 1, 0, 0});
  CHECK(reduction_hilbert(testing::octahedron(), make_generic(6, 3, kQ), 3, 4).dims == Dims{1, 3, 3, 1, 0});
  CHECK(reduction_hilbert(c, a, 0, 3).dims == Dims{1, 3, 6, 9});
  CHECK_THROWS_AS(reduction_hilbert(c, a, 4, 3), std::invalid_argument);
  CHECK_THROWS_AS(reduction_hilbert(c, a, 1, -1), std::invalid_argument);
  CHECK_THROWS_AS(reduction_hilbert(c, make_generic(4, 2, kQ), 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(reduction_hilbert(testing::octahedron(), make_generic(6, 3, kQ), 1, 12, 500), SizeLimitExceeded);
}

TEST_CASE("reduction sanity bounds") {
  for (const auto& e : corpus()) {
    const int d = e.complex.dimension() + 1;
    for (FieldSpec field : {kQ, kP}) {
      const auto a = make_generic(e.complex.n(), d, field, 17);
      for (int m = 0; m <= d; ++m) {
        const auto r = reduction_hilbert(e.complex, a, m, 5);
        CHECK(r.dims[0] == 1);
        CHECK(r.dims[1] == static_cast<std::size_t>(e.complex.n() - m));
        for (int j = 0; j <= 5; ++j) CHECK(r.dims[j] <= supported_monomial_count(e.complex, j));
      }
    }
  }
}

TEST_CASE("reductions match the squarefree prediction above degree m") {
  for (const auto& e : corpus()) {
    const int d = e.complex.dimension() + 1;
    const auto ring = sqfree_data_of_face_ring(e.complex);
    for (FieldSpec field : {kQ, kP}) {
      const auto a = make_generic(e.complex.n(), d, field, 5);
      for (int m = 1; m <= d; ++m) {
        const auto r = reduction_hilbert(e.complex, a, m, m + 3);
        for (int i = m + 1; i <= m + 3; ++i) {
          CAPTURE(e.name);
          CAPTURE(m);
          CAPTURE(i);
          CHECK(r.dims[i] == sqfree_quotient_hilbert(ring, m, i));
        }
      }
    }
  }
}

TEST_CASE("Cohen-Macaulay reductions give the h-vector") {
  for (const auto& e : corpus()) {
    if (!is_cm(e.complex, kQ)) continue;
    const int d = e.complex.dimension() + 1;
    const auto r = reduction_hilbert(e.complex, make_generic(e.complex.n(), d, kQ), d, d + 1);
    auto h = e.complex.h_vector();
    h.resize(d + 2, 0);
    for (int j = 0; j <= d + 1; ++j) CHECK(static_cast<std::int64_t>(r.dims[j]) == h[j]);
  }
}

TEST_CASE("determinacy probe") {
  const auto bow = determinacy_probe(testing::bowtie(), 3, 5, 5, kP, 1);
  CHECK(bow.constant);
  CHECK(bow.trials.size() == 5);
  const auto oct = determinacy_probe(testing::octahedron(), 3, 5, 5, kP, 1);
  CHECK(oct.constant);
  CHECK(oct.trials[0].dims == Dims{1, 3, 3, 1, 0, 0});
  const auto cyc = determinacy_probe(testing::cycle3(), 2, 3, 4, kQ, 1);
  CHECK(cyc.constant);
  CHECK(cyc.trials[0].dims == Dims{1, 1, 1, 0, 0});
  CHECK_FALSE(oct.trials[0].coefficients == oct.trials[1].coefficients);
  CHECK_THROWS_AS(determinacy_probe(testing::cycle3(), 2, 1, 4, kQ, 1), std::invalid_argument);
}
