#include "facering/io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace facering {

namespace {

[[noreturn]] void fail(std::string_view source, const std::string& path, const std::string& what) {
  throw InputError(std::string(source) + ": " + path + ": " + what);
}

const Json& member(const Json& j, const char* key, std::string_view source, const std::string& path) {
  if (!j.is_object()) fail(source, path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(source, path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t integer(const Json& j, std::string_view source, const std::string& path) {
  if (!j.is_number_integer()) fail(source, path, "expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

std::int64_t integer_in(const Json& j, std::int64_t lo, std::int64_t hi, std::string_view source,
                        const std::string& path) {
  const std::int64_t v = integer(j, source, path);
  if (v < lo || v > hi) {
    fail(source, path, std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return v;
}

const Json& array(const Json& j, std::string_view source, const std::string& path) {
  if (!j.is_array()) fail(source, path, "expected an array");
  return j;
}

std::string at(const std::string& path, std::size_t k) { return path + "[" + std::to_string(k) + "]"; }

constexpr std::int64_t kMaxInt = std::numeric_limits<int>::max();

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string(source) + ": " + e.what());
  }
}

InputKind detect_input_kind(const Json& j, std::string_view source) {
  if (!j.is_object()) fail(source, "$", "expected an object");
  if (j.contains("facets")) return InputKind::complex;
  if (j.contains("dims")) return InputKind::sqfree;
  fail(source, "$", "neither \"facets\" (complex) nor \"dims\" (squarefree data) present");
}

Json complex_to_json(const SimplicialComplex& complex) {
  Json facets = Json::array();
  for (Face f : complex.facets()) facets.push_back(f.vertices());
  return Json{{"n", complex.n()}, {"facets", std::move(facets)}};
}

SimplicialComplex complex_from_json(const Json& j, std::string_view source) {
  const int n = static_cast<int>(integer_in(member(j, "n", source, "$"), 1, 64, source, "$.n"));
  const Json& facets = array(member(j, "facets", source, "$"), source, "$.facets");
  std::vector<Face> generators;
  for (std::size_t k = 0; k < facets.size(); ++k) {
    const std::string path = at("$.facets", k);
    const Json& facet = array(facets[k], source, path);
    Face f;
    for (std::size_t q = 0; q < facet.size(); ++q) {
      const auto v = static_cast<int>(integer_in(facet[q], 1, n, source, at(path, q)));
      if (f.contains(v)) fail(source, at(path, q), "repeated vertex " + std::to_string(v));
      f = f.with(v);
    }
    generators.push_back(f);
  }
  return SimplicialComplex::from_faces(n, generators);
}

Json sqfree_to_json(const SqfreeData& data) {
  Json dims = Json::array();
  for (const auto& [f, dim] : data.dims) {
    std::vector<int> indicator(data.n, 0);
    for (int v : f.vertices()) indicator[v - 1] = 1;
    dims.push_back(Json{{"F", indicator}, {"dim", dim}});
  }
  return Json{{"n", data.n}, {"dims", std::move(dims)}};
}

SqfreeData sqfree_from_json(const Json& j, std::string_view source) {
  SqfreeData out;
  out.n = static_cast<int>(integer_in(member(j, "n", source, "$"), 1, 64, source, "$.n"));
  const Json& dims = array(member(j, "dims", source, "$"), source, "$.dims");
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const std::string path = at("$.dims", k);
    const Json& indicator = array(member(dims[k], "F", source, path), source, path + ".F");
    if (indicator.size() != static_cast<std::size_t>(out.n)) {
      fail(source, path + ".F", "expected " + std::to_string(out.n) + " entries, got " + std::to_string(indicator.size()));
    }
    Face f;
    for (std::size_t q = 0; q < indicator.size(); ++q) {
      if (integer_in(indicator[q], 0, 1, source, at(path + ".F", q)) == 1) f = f.with(static_cast<int>(q) + 1);
    }
    const auto dim = static_cast<std::size_t>(integer_in(member(dims[k], "dim", source, path), 0,
                                                         std::numeric_limits<std::int64_t>::max(), source, path + ".dim"));
    if (!out.dims.emplace(f, dim).second) fail(source, path + ".F", "degree " + f.to_string() + " listed twice");
  }
  return out;
}

Json series_to_json(const HilbertSeries& series) {
  return Json{{"numerator", series.numerator()}, {"denom_power", series.denom_power()}};
}

HilbertSeries series_from_json(const Json& j, std::string_view source) {
  const Json& num = array(member(j, "numerator", source, "$"), source, "$.numerator");
  std::vector<std::int64_t> coeffs;
  for (std::size_t k = 0; k < num.size(); ++k) coeffs.push_back(integer(num[k], source, at("$.numerator", k)));
  const auto e = static_cast<int>(integer_in(member(j, "denom_power", source, "$"), 0, kMaxInt, source, "$.denom_power"));
  return HilbertSeries(std::move(coeffs), e);
}

Json coefficients_to_json(const GenericCoefficients& a) {
  Json rows = Json::array();
  for (int t = 1; t <= a.n; ++t) {
    Json row = Json::array();
    for (int p = 1; p <= a.m; ++p) row.push_back(a.at(t, p));
    rows.push_back(std::move(row));
  }
  return Json{{"field", a.field.to_string()}, {"n", a.n}, {"m", a.m}, {"verified", a.verified}, {"rows", std::move(rows)}};
}

GenericCoefficients coefficients_from_json(const Json& j, std::string_view source) {
  GenericCoefficients a;
  const Json& field = member(j, "field", source, "$");
  if (!field.is_string()) fail(source, "$.field", "expected a string");
  try {
    a.field = FieldSpec::parse(field.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(source, "$.field", e.what());
  }
  a.n = static_cast<int>(integer_in(member(j, "n", source, "$"), 1, 64, source, "$.n"));
  a.m = static_cast<int>(integer_in(member(j, "m", source, "$"), 0, kMaxInt, source, "$.m"));
  const Json& verified = member(j, "verified", source, "$");
  if (!verified.is_boolean()) fail(source, "$.verified", "expected a boolean");
  a.verified = verified.get<bool>();
  const Json& rows = array(member(j, "rows", source, "$"), source, "$.rows");
  if (rows.size() != static_cast<std::size_t>(a.n)) fail(source, "$.rows", "expected " + std::to_string(a.n) + " rows");
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const Json& row = array(rows[t], source, at("$.rows", t));
    if (row.size() != static_cast<std::size_t>(a.m)) {
      fail(source, at("$.rows", t), "expected " + std::to_string(a.m) + " entries");
    }
    for (std::size_t p = 0; p < row.size(); ++p) a.entries.push_back(integer(row[p], source, at(at("$.rows", t), p)));
  }
  return a;
}

Json reduction_to_json(const ReductionHilbert& r) {
  return Json{{"m", r.m}, {"dims", r.dims}, {"coefficients", coefficients_to_json(r.coefficients)}};
}

ReductionHilbert reduction_from_json(const Json& j, std::string_view source) {
  ReductionHilbert r;
  r.m = static_cast<int>(integer_in(member(j, "m", source, "$"), 0, kMaxInt, source, "$.m"));
  const Json& dims = array(member(j, "dims", source, "$"), source, "$.dims");
  for (std::size_t k = 0; k < dims.size(); ++k) {
    r.dims.push_back(static_cast<std::size_t>(
        integer_in(dims[k], 0, std::numeric_limits<std::int64_t>::max(), source, at("$.dims", k))));
  }
  r.coefficients = coefficients_from_json(member(j, "coefficients", source, "$"), std::string(source) + " coefficients");
  return r;
}

Json table_to_json(const QuotientLcTable& table) {
  Json entries = Json::array();
  for (const QuotientLcEntry& e : table.entries) entries.push_back(Json{{"l", e.l}, {"i", e.i}, {"dim", e.dim}});
  return Json{{"m", table.m}, {"d", table.d}, {"entries", std::move(entries)}};
}

QuotientLcTable table_from_json(const Json& j, std::string_view source) {
  QuotientLcTable table;
  table.m = static_cast<int>(integer_in(member(j, "m", source, "$"), 0, kMaxInt, source, "$.m"));
  table.d = static_cast<int>(integer_in(member(j, "d", source, "$"), 0, kMaxInt, source, "$.d"));
  const Json& entries = array(member(j, "entries", source, "$"), source, "$.entries");
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string path = at("$.entries", k);
    QuotientLcEntry e;
    e.l = static_cast<int>(integer_in(member(entries[k], "l", source, path), 1, kMaxInt, source, path + ".l"));
    e.i = static_cast<int>(integer_in(member(entries[k], "i", source, path), 1, kMaxInt, source, path + ".i"));
    e.dim = static_cast<std::size_t>(integer_in(member(entries[k], "dim", source, path), 0,
                                                std::numeric_limits<std::int64_t>::max(), source, path + ".dim"));
    table.entries.push_back(e);
  }
  return table;
}

std::string table_to_tsv(const QuotientLcTable& table) {
  std::ostringstream out;
  out << "m\t" << table.m << "\td\t" << table.d << "\n";
  out << "l\ti\tdim\n";
  for (const QuotientLcEntry& e : table.entries) out << e.l << '\t' << e.i << '\t' << e.dim << '\n';
  return out.str();
}

QuotientLcTable table_from_tsv(std::string_view text, std::string_view source) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto bad = [&](const std::string& what) -> void {
    throw InputError(std::string(source) + ": line " + std::to_string(line_no) + ": " + what);
  };
  QuotientLcTable table;
  if (!std::getline(in, line)) bad("empty input");
  ++line_no;
  {
    std::istringstream row(line);
    std::string mk, dk;
    if (!(row >> mk >> table.m >> dk >> table.d) || mk != "m" || dk != "d") bad("expected \"m<TAB><m><TAB>d<TAB><d>\"");
  }
  if (!std::getline(in, line) || line != "l\ti\tdim") {
    ++line_no;
    bad("expected header \"l<TAB>i<TAB>dim\"");
  }
  ++line_no;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    QuotientLcEntry e;
    long long dim = -1;
    std::string extra;
    if (!(row >> e.l >> e.i >> dim) || (row >> extra) || dim < 0) bad("expected three nonnegative integers");
    e.dim = static_cast<std::size_t>(dim);
    table.entries.push_back(e);
  }
  return table;
}

}  // namespace facering
