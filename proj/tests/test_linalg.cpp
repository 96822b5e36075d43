#include <doctest.h>

#include <stdexcept>

#include <random>

#include "facering/matrix.hpp"
#include "oracles.hpp"

using namespace facering;

namespace {

std::vector<std::vector<std::int64_t>> random_rows(std::mt19937_64& rng, std::size_t r, std::size_t c, int spread,
                                                   int zero_bias) {
  std::uniform_int_distribution<int> value(-spread, spread), coin(0, 9);
  std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
  for (auto& row : rows)
    for (auto& x : row) x = coin(rng) < zero_bias ? 0 : value(rng);
  return rows;
}

const FieldSpec kQ = FieldSpec::rational();
const FieldSpec kF7 = FieldSpec::prime(7);

}  // namespace

TEST_CASE("field specs") {
  CHECK(FieldSpec::parse("q").is_rational());
  CHECK(FieldSpec::parse("fp:32003").characteristic() == 32003);
  CHECK(FieldSpec::parse("fp:2").to_string() == "fp:2");
  CHECK_THROWS_AS(FieldSpec::parse("fp:4"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("r"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("fp:"), std::invalid_argument);
}

TEST_CASE("rank, kernel and solve on small examples") {
  const auto m = ExactMatrix::from_rows(kQ, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  const auto k = kernel_basis(m);
  CHECK(k.cols() == 1);
  CHECK((m * k).is_zero());
  CHECK(k.entry(0, 0) == "-1");
  CHECK(k.entry(1, 0) == "-1");
  CHECK(k.entry(2, 0) == "1");

  const auto b = ExactMatrix::from_rows(kQ, {{1}, {2}, {0}});
  const auto x = solve(m, b);
  REQUIRE(x.has_value());
  CHECK(m * *x == b);
  CHECK_FALSE(solve(m, ExactMatrix::from_rows(kQ, {{1}, {0}, {0}})).has_value());

  const auto half = ExactMatrix::from_rows(kQ, {{2}});
  CHECK(solve(half, ExactMatrix::from_rows(kQ, {{1}}))->entry(0, 0) == "1/2");

  // Over F_2 the same matrix has rank 1.
  CHECK(rank(ExactMatrix::from_rows(FieldSpec::prime(2), {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})) == 1);
}

TEST_CASE("empty shapes") {
  CHECK(rank(ExactMatrix(kQ, 0, 5)) == 0);
  CHECK(kernel_basis(ExactMatrix(kQ, 0, 3)).cols() == 3);
  CHECK(kernel_basis(ExactMatrix(kQ, 3, 0)).rows() == 0);
  CHECK(image_basis(ExactMatrix(kF7, 4, 0)).cols() == 0);
  CHECK((ExactMatrix(kQ, 2, 0) * ExactMatrix(kQ, 0, 3)).is_zero());
}

TEST_CASE("mixing fields is rejected") {
  CHECK_THROWS_AS(ExactMatrix(kQ, 1, 1) * ExactMatrix(kF7, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(ExactMatrix(kQ, 2, 1) * ExactMatrix(kQ, 2, 1), std::invalid_argument);
}

TEST_CASE("rank agrees with the reference elimination") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    const auto rows = random_rows(rng, r, c, 4, trial % 8);
    CHECK(rank(ExactMatrix::from_rows(kQ, rows)) == oracle::rank(rows, 0));
    CHECK(rank(ExactMatrix::from_rows(kF7, rows)) == oracle::rank(rows, 7));
    CHECK(rank(ExactMatrix::from_rows(FieldSpec::prime(2), rows)) == oracle::rank(rows, 2));
  }
}

TEST_CASE("rank-nullity and kernel/image properties") {
  std::mt19937_64 rng(5);
  for (FieldSpec field : {kQ, kF7}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = rng() % 6, c = rng() % 6;
      const auto m = ExactMatrix::from_rows(field, random_rows(rng, r, c, 3, 5));
      if (r == 0) continue;
      const auto k = kernel_basis(m);
      const auto im = image_basis(m);
      CHECK(rank(m) + k.cols() == c);
      CHECK(im.cols() == rank(m));
      CHECK(rank(k) == k.cols());
      CHECK((m * k).is_zero());
      CHECK(rank(m.transpose()) == rank(m));
      CHECK(quotient_dim(m, im) == 0);
      for (std::size_t p : pivot_columns(m)) CHECK(p < c);

      Factorization fac(m);
      CHECK(fac.rank() == rank(m));
      const auto target = m * ExactMatrix::from_rows(field, random_rows(rng, c, 2, 3, 0));
      const auto x = fac.solve(target);
      REQUIRE(x.has_value());
      CHECK(m * *x == target);
    }
  }
}

TEST_CASE("subspace intersection") {
  const auto a = ExactMatrix::from_rows(kQ, {{1, 0}, {0, 1}, {0, 0}});
  const auto b = ExactMatrix::from_rows(kQ, {{0, 0}, {1, 0}, {0, 1}});
  const std::vector<ExactMatrix> both{a, b};
  const auto meet = subspace_intersection(both);
  CHECK(meet.cols() == 1);
  CHECK(meet.entry(0, 0) == "0");
  CHECK(meet.entry(2, 0) == "0");
  CHECK(quotient_dim(a, meet) == 1);
  CHECK_THROWS_AS(quotient_dim(meet, a), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = ExactMatrix::from_rows(kF7, random_rows(rng, 5, 3, 3, 2));
    const auto v = ExactMatrix::from_rows(kF7, random_rows(rng, 5, 3, 3, 2));
    const std::vector<ExactMatrix> pair{u, v};
    const auto w = subspace_intersection(pair);
    CHECK(rank(w) + rank(u.hconcat(v)) == rank(u) + rank(v));
  }
}
