#include <doctest.h>

#include "facering/io.hpp"
#include "facering/local_cohomology.hpp"
#include "support.hpp"

using namespace facering;

namespace {

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("complex JSON round trip") {
  for (const auto& e : corpus()) {
    const Json j = complex_to_json(e.complex);
    CHECK(complex_from_json(parse_json(j.dump(), "mem"), "mem") == e.complex);
  }
  const auto j = parse_json(R"({"n": 5, "facets": [[1,2,3],[3,4,5]]})", "mem");
  CHECK(complex_from_json(j, "mem") == testing::bowtie());
  CHECK(detect_input_kind(j, "mem") == InputKind::complex);

  const auto none = complex_from_json(parse_json(R"({"n": 2, "facets": []})", "mem"), "mem");
  const auto empty = complex_from_json(parse_json(R"({"n": 2, "facets": [[]]})", "mem"), "mem");
  CHECK(none.is_void());
  CHECK(empty == SimplicialComplex::empty_face_only(2));
  CHECK(complex_from_json(complex_to_json(none), "mem") == none);
  CHECK(complex_from_json(complex_to_json(empty), "mem") == empty);
}

TEST_CASE("input diagnostics name the location") {
  CHECK(error_of([] { parse_json("{\"n\": 3,\n \"facets\": [[1,2]", "f.json"); }).find("line 2") != std::string::npos);
  CHECK(error_of([] { complex_from_json(parse_json(R"({"n": 3, "facets": [[1,2],[2,7]]})", "f"), "f"); }) ==
        "f: $.facets[1][1]: 7 outside [1, 3]");
  CHECK(error_of([] { complex_from_json(parse_json(R"({"facets": []})", "f"), "f"); }) == "f: $: missing field \"n\"");
  CHECK(error_of([] { complex_from_json(parse_json(R"({"n": 3, "facets": [[1, "x"]]})", "f"), "f"); })
            .find("$.facets[0][1]") != std::string::npos);
  CHECK(error_of([] { complex_from_json(parse_json(R"({"n": 3, "facets": [[1, 1]]})", "f"), "f"); })
            .find("repeated vertex") != std::string::npos);
  CHECK(error_of([] { complex_from_json(parse_json(R"({"n": 0, "facets": []})", "f"), "f"); }) ==
        "f: $.n: 0 outside [1, 64]");
  CHECK(error_of([] { detect_input_kind(parse_json(R"({"n": 3})", "f"), "f"); }).find("neither") != std::string::npos);
  CHECK(error_of([] { read_text_file("/nonexistent/complex.json"); }).find("cannot open") != std::string::npos);
}

TEST_CASE("squarefree data JSON") {
  const auto j = parse_json(R"({"n": 3, "dims": [{"F": [1,1,0], "dim": 2}, {"F": [0,0,0], "dim": 1}]})", "mem");
  CHECK(detect_input_kind(j, "mem") == InputKind::sqfree);
  const auto data = sqfree_from_json(j, "mem");
  CHECK(data.at(Face::of({1, 2})) == 2);
  CHECK(data.at(Face()) == 1);
  CHECK(sqfree_from_json(parse_json(sqfree_to_json(data).dump(), "mem"), "mem") == data);
  const auto ring = sqfree_data_of_face_ring(testing::rp2_6());
  CHECK(sqfree_from_json(sqfree_to_json(ring), "mem") == ring);

  CHECK(error_of([] { sqfree_from_json(parse_json(R"({"n": 2, "dims": [{"F": [1], "dim": 1}]})", "f"), "f"); })
            .find("$.dims[0].F") != std::string::npos);
  CHECK(error_of([] { sqfree_from_json(parse_json(R"({"n": 2, "dims": [{"F": [2, 0], "dim": 1}]})", "f"), "f"); })
            .find("$.dims[0].F[0]") != std::string::npos);
  CHECK(error_of([] {
          sqfree_from_json(parse_json(R"({"n": 1, "dims": [{"F": [1], "dim": 1}, {"F": [1], "dim": 2}]})", "f"), "f");
        }).find("twice") != std::string::npos);
  CHECK(error_of([] { sqfree_from_json(parse_json(R"({"n": 1, "dims": [{"F": [1], "dim": -1}]})", "f"), "f"); })
            .find("$.dims[0].dim") != std::string::npos);
}

TEST_CASE("Hilbert series, coefficients and reductions round trip") {
  CohomologyEngine engine(testing::cycle3(), FieldSpec::rational());
  const auto s = lc_hilbert_series(engine, 2);
  CHECK(series_to_json(s).dump() == R"({"numerator":[1,1,1],"denom_power":2})");
  CHECK(series_from_json(series_to_json(s), "mem") == s);

  const auto a = make_generic(5, 3, FieldSpec::prime(32003), 4);
  CHECK(coefficients_from_json(parse_json(coefficients_to_json(a).dump(), "mem"), "mem") == a);

  const auto r = reduction_hilbert(testing::bowtie(), a, 2, 4);
  CHECK(reduction_from_json(parse_json(reduction_to_json(r).dump(), "mem"), "mem") == r);
}

TEST_CASE("quotient tables in JSON and TSV agree") {
  for (const auto& e : corpus()) {
    CohomologyEngine engine(e.complex, FieldSpec::rational());
    for (int m = 0; m <= e.complex.dimension() + 1; ++m) {
      const auto table = quotient_lc_table(engine, m, 5);
      const auto from_json = table_from_json(parse_json(table_to_json(table).dump(), "mem"), "mem");
      const auto from_tsv = table_from_tsv(table_to_tsv(table), "mem");
      CHECK(from_json == table);
      CHECK(from_tsv == table);
    }
  }
  CHECK(table_to_tsv(quotient_lc_table(CohomologyEngine(testing::bowtie(), FieldSpec::rational()), 1, 2)) ==
        "m\t1\td\t3\nl\ti\tdim\n1\t1\t0\n1\t2\t0\n2\t1\t0\n2\t2\t2\n");
  CHECK(error_of([] { table_from_tsv("m\t1\td\t3\nl\ti\tdim\n1\t2\n", "t.tsv"); }) ==
        "t.tsv: line 3: expected three nonnegative integers");
  CHECK(error_of([] { table_from_tsv("m 1\n", "t.tsv"); }).find("line 1") != std::string::npos);
}
