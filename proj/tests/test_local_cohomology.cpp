#include <doctest.h>

#include <stdexcept>

#include "facering/combinatorics.hpp"
#include "facering/generic.hpp"
#include "facering/hilbert_series.hpp"
#include "facering/local_cohomology.hpp"
#include "facering/monomial.hpp"
#include "support.hpp"

using namespace facering;

namespace {
const FieldSpec kQ = FieldSpec::rational();
const FieldSpec kP = FieldSpec::prime(32003);

ExponentVector neg(std::vector<int> u) {
  for (int& x : u) x = -x;
  return {u};
}
}  // namespace

TEST_CASE("binomial convention") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(2, 3) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(-1, -1) == 0);
  CHECK(binomial(-1, 0) == 0);
}

TEST_CASE("Hilbert series reduction and pole order") {
  const HilbertSeries a({0, 0, 3}, 2);
  CHECK(a.pole_order() == 2);
  // (1-λ)(1+λ)/(1-λ)^3
  const HilbertSeries b({1, 0, -1}, 3);
  CHECK(b.pole_order() == 2);
  CHECK(b == HilbertSeries({1, 1}, 2));
  CHECK(HilbertSeries().pole_order() == 0);
  CHECK(HilbertSeries({0, 0}, 4).is_zero());
  CHECK(HilbertSeries({0, 0}, 4).pole_order() == 0);
  const HilbertSeries c({1, -1}, 1);
  CHECK(c.pole_order() == 0);
  CHECK(c.coefficient(0) == 1);
  CHECK(c.coefficient(1) == 0);

  const auto s = HilbertSeries::from_face_terms({{1, 0}, {3, 1}, {3, 2}});
  for (int j = 0; j < 8; ++j) CHECK(s.coefficient(j) == (j == 0 ? 1 : 3 * j));
}

TEST_CASE("supported monomials") {
  const auto v = supported_monomials(testing::cycle3(), 2);
  CHECK(v.size() == 6);
  CHECK(v.front().entries == std::vector<int>{0, 0, 2});
  CHECK(v.back().entries == std::vector<int>{2, 0, 0});
  CHECK(supported_monomials(testing::bowtie(), 0).size() == 1);
  CHECK_THROWS_AS(supported_monomials(testing::octahedron(), 12, 100), SizeLimitExceeded);

  for (const auto& e : corpus()) {
    const auto faces = testing::faces_of(e.complex);
    for (int r = 0; r <= 5; ++r) {
      const auto mine = supported_monomials(e.complex, r);
      auto theirs = oracle::supported_monomials(faces, e.complex.n(), r);
      std::sort(theirs.begin(), theirs.end());
      REQUIRE(mine.size() == theirs.size());
      for (std::size_t k = 0; k < mine.size(); ++k) CHECK(mine[k].entries == theirs[k]);
      CHECK(supported_monomial_count(e.complex, r) == theirs.size());
    }
  }
}

TEST_CASE("fine graded dimensions") {
  CohomologyEngine cyc(testing::cycle3(), kQ), bow(testing::bowtie(), kQ);
  CHECK(lc_fine_dim(cyc, 2, neg({0, 0, 0})) == 1);
  CHECK(lc_fine_dim(cyc, 2, neg({1, 0, 0})) == 1);
  CHECK(lc_fine_dim(bow, 2, neg({1, 1, 0, 0, 0})) == 0);
  CHECK(lc_fine_dim(bow, 2, neg({1, 0, 0, 1, 0})) == 0);
  CHECK(lc_fine_dim(bow, 2, neg({0, 0, 4, 0, 0})) == 1);
  CHECK_THROWS_AS(lc_fine_dim(cyc, 2, ExponentVector{{1, 0, 0}}), std::invalid_argument);
}

TEST_CASE("coarse graded dimensions") {
  CohomologyEngine cyc(testing::cycle3(), kQ);
  CHECK(lc_coarse_dim(cyc, 2, -1) == 3);
  CHECK(lc_coarse_dim(cyc, 2, -2) == 6);
  CHECK(lc_coarse_dim(cyc, 1, -1) == 0);
  CHECK(lc_coarse_dim(cyc, 2, 0) == 1);
  CHECK_THROWS_AS(lc_coarse_dim(cyc, 2, 1), std::invalid_argument);
}

TEST_CASE("local cohomology Hilbert series") {
  CohomologyEngine cyc(testing::cycle3(), kQ), bow(testing::bowtie(), kQ);
  const auto s = lc_hilbert_series(cyc, 2);
  CHECK(s == HilbertSeries::from_face_terms({{1, 0}, {3, 1}, {3, 2}}));
  CHECK(s.pole_order() == 2);
  const std::vector<std::int64_t> expansion{1, 3, 6, 9, 12, 15};
  for (int j = 0; j < 6; ++j) CHECK(s.coefficient(j) == expansion[j]);
  CHECK(lc_hilbert_series(cyc, 1).is_zero());
  CHECK(lc_hilbert_series(bow, 2) == HilbertSeries({0, 1}, 1));
  CHECK(lc_hilbert_series(bow, 3).pole_order() == 3);
}

TEST_CASE("series coefficients, closed formula and block enumeration agree") {
  for (const auto& e : corpus()) {
    const auto faces = testing::faces_of(e.complex);
    for (FieldSpec field : {kQ, FieldSpec::prime(2)}) {
      CohomologyEngine engine(e.complex, field);
      for (int i = 0; i <= e.complex.dimension() + 1; ++i) {
        const auto series = lc_hilbert_series(engine, i);
        for (int j = 0; j <= 6; ++j) {
          std::int64_t enumerated = 0;
          for (const auto& u : oracle::supported_monomials(faces, e.complex.n(), j)) {
            enumerated += static_cast<std::int64_t>(
                oracle::reduced_homology_dim(oracle::link(faces, oracle::support(u)),
                                             i - 1 - std::popcount(oracle::support(u)), testing::oracle_char(field)));
          }
          CAPTURE(e.name);
          CAPTURE(i);
          CAPTURE(j);
          CHECK(series.coefficient(j) == static_cast<std::int64_t>(lc_coarse_dim(engine, i, -j)));
          CHECK(series.coefficient(j) == enumerated);
          CHECK(lc_graded_piece(engine, i, j).total_dim == static_cast<std::size_t>(enumerated));
        }
      }
    }
  }
}

TEST_CASE("generic coefficients") {
  const auto v = make_generic(5, 2, kQ);
  CHECK(v.column(1) == std::vector<std::int64_t>{1, 1, 1, 1, 1});
  CHECK(v.column(2) == std::vector<std::int64_t>{1, 2, 3, 4, 5});
  CHECK(v.verified);
  const auto one = make_generic(3, 1, kP, 9);
  for (auto x : one.column(1)) CHECK(x != 0);

  const auto p = make_generic(4, 2, kP, 7);
  CHECK(p.verified);
  const auto check = check_square_minors(p);
  CHECK(check.all_nonsingular);
  CHECK(check.checked == 8 + 6);
  CHECK(make_generic(4, 2, kP, 7) == p);

  GenericCoefficients bad = v;
  bad.entries[0] = 0;
  CHECK_FALSE(check_square_minors(bad).all_nonsingular);
  // Over F_5 the Vandermonde column (1,2,..,6) repeats 1 and 6.
  CHECK_FALSE(vandermonde(6, 2, FieldSpec::prime(5)).verified);
}

TEST_CASE("theta action matrices") {
  CohomologyEngine cyc(testing::cycle3(), kQ);
  const std::vector<std::int64_t> ones{1, 1, 1};
  const auto m = theta_action_matrix(cyc, 2, 0, ones);
  CHECK(m.rows() == 1);
  CHECK(m.cols() == 3);
  CHECK(rank(m) == 1);

  // Same support: identity blocks scaled by the coefficient.
  CohomologyEngine bow(testing::bowtie(), kQ);
  const std::vector<std::int64_t> theta{1, 2, 3, 4, 5};
  const auto from = lc_graded_piece(bow, 2, 2);
  const auto to = lc_graded_piece(bow, 2, 1);
  const auto t = theta_action_matrix(bow, 2, 1, theta);
  const std::size_t src = from.blocks[from.block_of.at({0, 0, 2, 0, 0})].offset;
  const std::size_t dst = to.blocks[to.block_of.at({0, 0, 1, 0, 0})].offset;
  CHECK(t.entry(dst, src) == "3");

  const std::vector<std::int64_t> only_first{1, 0, 0, 0, 0};
  CHECK(theta_action_matrix(bow, 2, 1, only_first).is_zero());
  CHECK_THROWS_AS(theta_action_matrix(bow, 2, 1, ones), std::invalid_argument);
}

TEST_CASE("kernel dimensions") {
  CohomologyEngine cyc(testing::cycle3(), kQ);
  const auto a = make_generic(3, 3, kQ);
  for (int i = 0; i <= 3; ++i) CHECK(kernel_dim_bruteforce(cyc, 2, 0, i, a) == static_cast<std::size_t>(3 + 3 * i));
  for (int i = 1; i <= 3; ++i) CHECK(kernel_dim_bruteforce(cyc, 2, 1, i, a) == 3);
  for (int i = 1; i <= 5; ++i) CHECK(kernel_dim_formula(cyc, 2, 1, i) == 3);
  CHECK(kernel_dim_formula(cyc, 2, 0, 2) == 9);
  CHECK(kernel_dim_formula(cyc, 2, 0, 2) == lc_coarse_dim(cyc, 2, -3));
  CHECK_THROWS_AS(kernel_dim_formula(cyc, 2, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(kernel_dim_formula(cyc, 3, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(kernel_dim_bruteforce(cyc, 2, 4, 4, a), std::invalid_argument);

  CohomologyEngine bow(testing::bowtie(), kQ);
  const auto b = make_generic(5, 2, kQ);
  for (int i = 1; i <= 4; ++i) CHECK(kernel_dim_bruteforce(bow, 3, 1, i, b) == kernel_dim_formula(bow, 3, 1, i));

  for (const auto& e : corpus()) {
    CohomologyEngine engine(e.complex, kQ);
    const int d = e.complex.dimension() + 1;
    for (int l = 0; l <= d; ++l) {
      for (int m = 0; m <= 2; ++m) {
        std::size_t expected = 0;
        for (Face f : e.complex.faces_of_dim(m)) expected += engine.relative_dim(f, l - 1);
        CHECK(kernel_dim_formula(engine, l, m, m) == expected);
      }
    }
  }
}

TEST_CASE("kernel brute force over F_32003 and surjectivity") {
  for (const auto& e : corpus()) {
    CohomologyEngine engine(e.complex, kP);
    const auto a = make_generic(e.complex.n(), 3, kP, 2024);
    const int d = e.complex.dimension() + 1;
    for (int l = 1; l <= d; ++l) {
      for (int m = 0; m <= 2; ++m) {
        for (int i = m; i <= m + 2; ++i) {
          CAPTURE(e.name);
          CAPTURE(l);
          CAPTURE(m);
          CAPTURE(i);
          CHECK(kernel_dim_bruteforce(engine, l, m, i, a) == kernel_dim_formula(engine, l, m, i));
          if (i >= m + 1) CHECK(surjectivity_rank(engine, l, m, i, a) == kernel_dim_formula(engine, l, m, i - 1));
        }
      }
    }
  }
}
