#ifndef FACERING_VERIFY_HPP
#define FACERING_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "facering/complex.hpp"
#include "facering/field.hpp"
#include "facering/io.hpp"

namespace facering {

/// One checked identity. `lhs` and `rhs` map a quantity name to its value;
/// the record passes when every value on both sides is equal.
struct VerifyRecord {
  std::string suite;
  std::string complex;
  Json params;
  Json lhs;
  Json rhs;
  bool pass = false;
};

struct VerifyOptions {
  FieldSpec field = FieldSpec::rational();
  int m_max = 2;
  std::uint64_t seed = 0;
  std::vector<std::string> checks;  // empty: every suite
  std::optional<int> l;
  std::optional<int> m;
  std::optional<std::pair<int, int>> i_range;
};

struct VerifyTarget {
  std::string name;
  SimplicialComplex complex;
};

struct Ledger {
  std::vector<VerifyRecord> records;
  bool all_pass() const;
  std::size_t failures() const;
};

const std::vector<std::string>& suite_names();

/// Records of one suite on one complex. Throws std::invalid_argument for an unknown suite.
std::vector<VerifyRecord> run_suite(std::string_view suite, const VerifyTarget& target, const VerifyOptions& options);

/// Every requested suite on every target. Targets run concurrently; the
/// record order is fixed (target order, then suite order) regardless of scheduling.
Ledger run_verification(std::span<const VerifyTarget> targets, const VerifyOptions& options);

Json ledger_to_json(const Ledger& ledger, const VerifyOptions& options);

}  // namespace facering

#endif  // FACERING_VERIFY_HPP
