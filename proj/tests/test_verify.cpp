#include <doctest.h>

#include <stdexcept>

#include "facering/verify.hpp"
#include "support.hpp"

using namespace facering;

TEST_CASE("every suite passes on the bowtie over Q") {
  const std::vector<VerifyTarget> targets{{"bowtie", testing::bowtie()}};
  VerifyOptions options;
  options.m_max = 1;
  const Ledger ledger = run_verification(targets, options);
  CHECK(ledger.all_pass());
  std::set<std::string> seen;
  for (const auto& r : ledger.records) seen.insert(r.suite);
  // The bowtie is not Cohen-Macaulay, so only the CM anchor is absent.
  CHECK(seen.size() == suite_names().size() - 1);
  CHECK_FALSE(seen.contains("cm-anchor"));
}

TEST_CASE("ledger filters and record layout") {
  const VerifyTarget target{"bowtie", testing::bowtie()};
  VerifyOptions options;
  options.l = 3;
  options.m = 1;
  options.i_range = std::pair{1, 4};
  const auto records = run_suite("lemma-equality", target, options);
  REQUIRE(records.size() == 4);
  for (const auto& r : records) {
    CHECK(r.pass);
    CHECK(r.params["l"] == 3);
    CHECK(r.params["m"] == 1);
    CHECK(r.lhs["kernel_dim_bruteforce"] == r.rhs["kernel_dim_formula"]);
  }
  CHECK(records[3].lhs["kernel_dim_bruteforce"] == 6);
  CHECK_THROWS_AS(run_suite("no-such-check", target, options), std::invalid_argument);

  VerifyOptions cyc;
  cyc.m = 1;
  const auto art = run_suite("artinian-vs-sqfree", {"cycle3", testing::cycle3()}, cyc);
  REQUIRE(art.size() == 1);
  CHECK(art[0].lhs["reduction_hilbert"] == Json::array({3, 3, 3, 3}));
}

TEST_CASE("ledger JSON is deterministic over F_p") {
  std::vector<VerifyTarget> targets;
  for (const auto& e : corpus()) targets.push_back({e.name, e.complex});
  VerifyOptions options;
  options.field = FieldSpec::prime(32003);
  options.seed = 99;
  options.m_max = 1;
  options.checks = {"lemma-equality", "artinian-vs-sqfree", "isolated"};
  const auto first = ledger_to_json(run_verification(targets, options), options).dump();
  const auto second = ledger_to_json(run_verification(targets, options), options).dump();
  CHECK(first == second);
  CHECK(parse_json(first, "ledger")["pass"] == true);
}

TEST_CASE("a failing record is reported as a failure") {
  Ledger ledger;
  ledger.records.push_back({"s", "c", Json::object(), Json{{"a", 1}}, Json{{"b", 1}}, true});
  ledger.records.push_back({"s", "c", Json::object(), Json{{"a", 1}}, Json{{"b", 2}}, false});
  CHECK(ledger.failures() == 1);
  CHECK_FALSE(ledger.all_pass());
  CHECK(ledger_to_json(ledger, VerifyOptions{})["summary"]["failed"] == 1);
}
