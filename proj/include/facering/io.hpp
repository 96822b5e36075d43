#ifndef FACERING_IO_HPP
#define FACERING_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "facering/artinian.hpp"
#include "facering/complex.hpp"
#include "facering/generic.hpp"
#include "facering/hilbert_series.hpp"
#include "facering/quotient.hpp"
#include "facering/sqfree.hpp"

namespace facering {

using Json = nlohmann::ordered_json;

/// Malformed input. The message names the source and, where applicable, the
/// line/column of a syntax error or the JSON path of the offending field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::filesystem::path& path);
Json parse_json(std::string_view text, std::string_view source);

enum class InputKind { complex, sqfree };
/// A complex has "facets", squarefree data has "dims".
InputKind detect_input_kind(const Json& j, std::string_view source);

/// {"n": 5, "facets": [[1,2,3],[3,4,5]]}. "facets": [] is the void complex,
/// "facets": [[]] the complex {∅}.
Json complex_to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const Json& j, std::string_view source);

/// {"n": 3, "dims": [{"F": [1,1,0], "dim": 1}, ...]}.
Json sqfree_to_json(const SqfreeData& data);
SqfreeData sqfree_from_json(const Json& j, std::string_view source);

/// {"numerator": [c0, c1, ...], "denom_power": e}.
Json series_to_json(const HilbertSeries& series);
HilbertSeries series_from_json(const Json& j, std::string_view source);

Json coefficients_to_json(const GenericCoefficients& a);
GenericCoefficients coefficients_from_json(const Json& j, std::string_view source);

Json reduction_to_json(const ReductionHilbert& r);
ReductionHilbert reduction_from_json(const Json& j, std::string_view source);

/// {"m": 1, "d": 3, "entries": [{"l": 2, "i": 3, "dim": 4}, ...]}.
Json table_to_json(const QuotientLcTable& table);
QuotientLcTable table_from_json(const Json& j, std::string_view source);

/// A "m <m> d <d>" line, an "l i dim" header, then one row per entry; tab separated.
std::string table_to_tsv(const QuotientLcTable& table);
QuotientLcTable table_from_tsv(std::string_view text, std::string_view source);

}  // namespace facering

#endif  // FACERING_IO_HPP
