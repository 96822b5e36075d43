// Command-line front end: facering <analyze|lc|predict|reduce|verify|sqfree> ...
//
// Exit status: 0 success, 1 a verification check failed, 2 bad input.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "facering/artinian.hpp"
#include "facering/cohomology.hpp"
#include "facering/corpus.hpp"
#include "facering/io.hpp"
#include "facering/local_cohomology.hpp"
#include "facering/quotient.hpp"
#include "facering/singularity.hpp"
#include "facering/sqfree.hpp"
#include "facering/verify.hpp"

using namespace facering;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;

struct Config {
  std::string input;
  std::string field = "q";
  std::optional<int> m;
  std::optional<int> cutoff;
  int trials = 1;
  std::uint64_t seed = 0;
  std::string format = "pretty";
  std::vector<std::string> checks;
  int m_max = 2;
  std::optional<int> l;
  std::string i_range;
  std::size_t max_basis = kDefaultBasisLimit;
};

template <class T>
std::string join(const std::vector<T>& values, const char* sep = ", ") {
  std::ostringstream out;
  for (std::size_t k = 0; k < values.size(); ++k) out << (k ? sep : "") << values[k];
  return out.str();
}

Json load_input(const Config& cfg) { return parse_json(read_text_file(cfg.input), cfg.input); }

SimplicialComplex load_complex(const Config& cfg) {
  const Json j = load_input(cfg);
  if (detect_input_kind(j, cfg.input) != InputKind::complex) {
    throw InputError(cfg.input + ": expected a complex ({\"n\", \"facets\"})");
  }
  return complex_from_json(j, cfg.input);
}

void emit_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_analyze(const Config& cfg, FieldSpec field) {
  const SimplicialComplex c = load_complex(cfg);
  if (c.is_void()) throw InputError(cfg.input + ": the void complex has nothing to analyze");
  const SingularityReport report = singularity_report(c, field);
  const int r = c.dimension();
  std::vector<std::pair<int, bool>> codim;
  for (int k = 0; k <= r + 2; ++k) codim.emplace_back(k, cm_in_codim(c, k, field));
  const bool cm = is_cm(c, field);
  const bool buchsbaum = is_buchsbaum(c, field);

  if (cfg.format == "json") {
    Json singular = Json::array();
    for (Face f : report.singular_faces) singular.push_back(f.vertices());
    Json profile = Json::array();
    for (auto [k, holds] : codim) profile.push_back(Json{{"c", k}, {"holds", holds}});
    Json sd = report.singularity_dimension.is_neg_infinity() ? Json("-inf") : Json(report.singularity_dimension.value());
    emit_json(Json{{"complex", complex_to_json(c)},
                   {"field", field.to_string()},
                   {"d", report.d},
                   {"f_vector", c.f_vector()},
                   {"h_vector", c.h_vector()},
                   {"pure", c.is_pure()},
                   {"singular_faces", std::move(singular)},
                   {"singularity_dimension", std::move(sd)},
                   {"cohen_macaulay", cm},
                   {"buchsbaum", buchsbaum},
                   {"cm_in_codim", std::move(profile)}});
  } else if (cfg.format == "tsv") {
    std::cout << "key\tvalue\n";
    std::cout << "field\t" << field.to_string() << "\nd\t" << report.d << '\n';
    std::cout << "f_vector\t" << join(c.f_vector(), ",") << "\nh_vector\t" << join(c.h_vector(), ",") << '\n';
    std::cout << "pure\t" << c.is_pure() << '\n';
    std::vector<std::string> faces;
    for (Face f : report.singular_faces) faces.push_back(f.to_string());
    std::cout << "singular_faces\t" << join(faces, " ") << '\n';
    std::cout << "singularity_dimension\t" << report.singularity_dimension.to_string() << '\n';
    std::cout << "cohen_macaulay\t" << cm << "\nbuchsbaum\t" << buchsbaum << '\n';
    for (auto [k, holds] : codim) std::cout << "cm_in_codim_" << k << '\t' << holds << '\n';
  } else {
    std::vector<std::string> faces;
    for (Face f : report.singular_faces) faces.push_back(f.to_string());
    std::cout << "complex on " << c.n() << " vertices, dimension " << r << ", over " << field.to_string() << '\n';
    std::cout << "f-vector: (" << join(c.f_vector()) << ")  h-vector: (" << join(c.h_vector()) << ")\n";
    std::cout << "singular faces: " << (faces.empty() ? "none" : join(faces, " ")) << '\n';
    std::cout << "singularity dimension: " << report.singularity_dimension.to_string() << '\n';
    std::cout << "Cohen-Macaulay: " << (cm ? "yes" : "no") << "  Buchsbaum: " << (buchsbaum ? "yes" : "no") << '\n';
    std::cout << "CM in codimension c:";
    for (auto [k, holds] : codim) std::cout << "  c=" << k << ':' << (holds ? "yes" : "no");
    std::cout << '\n';
  }
  return kExitOk;
}

int cmd_lc(const Config& cfg, FieldSpec field) {
  const SimplicialComplex c = load_complex(cfg);
  const CohomologyEngine engine(c, field);
  const int d = c.dimension() + 1;
  const int top_j = cfg.cutoff.value_or(6);
  struct Row {
    int i;
    HilbertSeries series;
    std::vector<std::size_t> coarse;
  };
  std::vector<Row> rows;
  for (int i = 0; i <= d; ++i) {
    Row row{i, lc_hilbert_series(engine, i), {}};
    for (int j = 0; j <= top_j; ++j) row.coarse.push_back(lc_coarse_dim(engine, i, -j));
    rows.push_back(std::move(row));
  }
  if (cfg.format == "json") {
    Json out = Json::array();
    for (const Row& row : rows) {
      out.push_back(Json{{"i", row.i},
                         {"series", series_to_json(row.series)},
                         {"pole_order", row.series.pole_order()},
                         {"coarse_dims", row.coarse}});
    }
    emit_json(Json{{"field", field.to_string()}, {"d", d}, {"rows", std::move(out)}});
  } else if (cfg.format == "tsv") {
    std::cout << "i\tpole_order\tnumerator\tdenom_power";
    for (int j = 0; j <= top_j; ++j) std::cout << "\tdeg_-" << j;
    std::cout << '\n';
    for (const Row& row : rows) {
      std::cout << row.i << '\t' << row.series.pole_order() << '\t' << join(row.series.numerator(), ",") << '\t'
                << row.series.denom_power();
      for (std::size_t v : row.coarse) std::cout << '\t' << v;
      std::cout << '\n';
    }
  } else {
    std::cout << "local cohomology H^i of the face ring over " << field.to_string() << " (d = " << d << ")\n";
    for (const Row& row : rows) {
      std::cout << "i=" << row.i << "  F(1/λ) = " << row.series.to_string() << "  pole order "
                << row.series.pole_order() << "  dims in degrees 0..-" << top_j << ": " << join(row.coarse) << '\n';
    }
  }
  return kExitOk;
}

int cmd_predict(const Config& cfg, FieldSpec field) {
  if (!cfg.m) throw InputError("predict: --m is required");
  const SimplicialComplex c = load_complex(cfg);
  const CohomologyEngine engine(c, field);
  const QuotientLcTable table = quotient_lc_table(engine, *cfg.m, cfg.cutoff.value_or(5));
  const bool finite = predicts_finite_lc(engine, *cfg.m);
  if (cfg.format == "json") {
    emit_json(Json{{"field", field.to_string()}, {"m", *cfg.m}, {"finite_lc", finite}, {"table", table_to_json(table)}});
  } else if (cfg.format == "tsv") {
    std::cout << table_to_tsv(table);
  } else {
    std::cout << "generic quotient by " << *cfg.m << " linear forms over " << field.to_string()
              << ": finite local cohomology " << (finite ? "yes" : "no") << '\n';
    for (int l = 1; l <= table.d - table.m; ++l) {
      std::vector<std::size_t> row;
      for (const QuotientLcEntry& e : table.entries) {
        if (e.l == l) row.push_back(e.dim);
      }
      std::cout << "l=" << l << "  dims in degrees -1, -2, ...: " << join(row) << '\n';
    }
  }
  return kExitOk;
}

int cmd_reduce(const Config& cfg, FieldSpec field) {
  if (!cfg.m) throw InputError("reduce: --m is required");
  const SimplicialComplex c = load_complex(cfg);
  const int cutoff = cfg.cutoff.value_or(6);
  if (cfg.trials >= 2) {
    const DeterminacyResult probe = determinacy_probe(c, *cfg.m, cfg.trials, cutoff, field, cfg.seed);
    if (cfg.format == "json") {
      Json trials = Json::array();
      for (const ReductionHilbert& r : probe.trials) trials.push_back(reduction_to_json(r));
      emit_json(Json{{"field", field.to_string()}, {"m", *cfg.m}, {"cutoff", cutoff}, {"seed", cfg.seed},
                     {"determinacy", Json{{"constant", probe.constant}, {"trials", std::move(trials)}}}});
    } else if (cfg.format == "tsv") {
      std::cout << "trial\tj\tdim\n";
      for (std::size_t t = 0; t < probe.trials.size(); ++t) {
        for (std::size_t j = 0; j < probe.trials[t].dims.size(); ++j) {
          std::cout << t << '\t' << j << '\t' << probe.trials[t].dims[j] << '\n';
        }
      }
    } else {
      for (std::size_t t = 0; t < probe.trials.size(); ++t) {
        std::cout << "trial " << t << ": (" << join(probe.trials[t].dims) << ")\n";
      }
      std::cout << "Hilbert function constant across trials: " << (probe.constant ? "yes" : "no") << '\n';
    }
    return kExitOk;
  }
  const GenericCoefficients a = make_generic(c.n(), *cfg.m, field, cfg.seed);
  const ReductionHilbert r = reduction_hilbert(c, a, *cfg.m, cutoff, cfg.max_basis);
  if (cfg.format == "json") {
    emit_json(Json{{"field", field.to_string()}, {"cutoff", cutoff}, {"reduction", reduction_to_json(r)}});
  } else if (cfg.format == "tsv") {
    std::cout << "j\tdim\n";
    for (std::size_t j = 0; j < r.dims.size(); ++j) std::cout << j << '\t' << r.dims[j] << '\n';
  } else {
    std::cout << "Hilbert function of the quotient by " << *cfg.m << " generic linear forms over " << field.to_string()
              << ": (" << join(r.dims) << ")\n";
  }
  return kExitOk;
}

std::pair<int, int> parse_range(const std::string& text) {
  static const std::regex range(R"(\s*(-?\d+)\s*(?:\.\.\s*(-?\d+))?\s*)");
  std::smatch match;
  if (!std::regex_match(text, match, range)) throw InputError("--i: expected <int> or <int>..<int>, got '" + text + "'");
  const int lo = std::stoi(match[1]);
  const int hi = match[2].matched ? std::stoi(match[2]) : lo;
  if (hi < lo) throw InputError("--i: empty range '" + text + "'");
  return {lo, hi};
}

int cmd_verify(const Config& cfg, FieldSpec field) {
  VerifyOptions options;
  options.field = field;
  options.m_max = cfg.m_max;
  options.seed = cfg.seed;
  options.checks = cfg.checks;
  options.l = cfg.l;
  options.m = cfg.m;
  if (!cfg.i_range.empty()) options.i_range = parse_range(cfg.i_range);

  std::vector<VerifyTarget> targets;
  if (cfg.input == "corpus") {
    for (const CorpusEntry& e : corpus()) targets.push_back({e.name, e.complex});
  } else {
    targets.push_back({cfg.input, load_complex(cfg)});
  }
  const Ledger ledger = run_verification(targets, options);

  if (cfg.format == "json") {
    emit_json(ledger_to_json(ledger, options));
  } else if (cfg.format == "tsv") {
    std::cout << "suite\tcomplex\tparams\tlhs\trhs\tpass\n";
    for (const VerifyRecord& r : ledger.records) {
      std::cout << r.suite << '\t' << r.complex << '\t' << r.params.dump() << '\t' << r.lhs.dump() << '\t'
                << r.rhs.dump() << '\t' << (r.pass ? "true" : "false") << '\n';
    }
  } else {
    for (const VerifyRecord& r : ledger.records) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.suite << ' ' << r.complex << ' ' << r.params.dump() << "  "
                << r.lhs.dump() << " vs " << r.rhs.dump() << '\n';
    }
    std::cout << ledger.records.size() << " checks, " << ledger.failures() << " failed\n";
  }
  return ledger.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_sqfree(const Config& cfg, FieldSpec field) {
  const Json j = load_input(cfg);
  const bool user_data = detect_input_kind(j, cfg.input) == InputKind::sqfree;
  SqfreeData data;
  std::optional<SqfreeData> lc_data;
  if (user_data) {
    data = sqfree_from_json(j, cfg.input);
  } else {
    const SimplicialComplex c = complex_from_json(j, cfg.input);
    if (c.is_void()) throw InputError(cfg.input + ": the void complex has no face ring");
    data = sqfree_data_of_face_ring(c);
    if (cfg.l && cfg.m) lc_data = sqfree_lc_data(c, *cfg.l + *cfg.m, field);
  }
  const int top = cfg.cutoff.value_or(6);
  std::vector<std::size_t> hilbert;
  for (int i = 0; i <= top; ++i) hilbert.push_back(sqfree_hilbert(data, i));
  std::vector<std::pair<int, std::size_t>> quotient, lc;
  if (cfg.m) {
    if (*cfg.m < 0) throw InputError("--m must be nonnegative");
    for (int i = *cfg.m + 1; i <= *cfg.m + top; ++i) quotient.emplace_back(i, sqfree_quotient_hilbert(data, *cfg.m, i));
    const SqfreeData& source = lc_data ? *lc_data : data;
    if (user_data || lc_data) {
      for (int i = 1; i <= top; ++i) lc.emplace_back(i, sqfree_quotient_lc(source, *cfg.m, i));
    }
  }
  if (cfg.format == "json") {
    Json out{{"data", sqfree_to_json(data)}, {"hilbert", hilbert}};
    if (cfg.m) {
      Json q = Json::array();
      for (auto [i, v] : quotient) q.push_back(Json{{"i", i}, {"dim", v}});
      out["quotient_hilbert"] = Json{{"m", *cfg.m}, {"values", std::move(q)}};
      if (!lc.empty()) {
        Json rows = Json::array();
        for (auto [i, v] : lc) rows.push_back(Json{{"i", i}, {"dim", v}});
        out["quotient_lc"] = Json{{"m", *cfg.m}, {"valid_for_large_i_only", user_data}, {"values", std::move(rows)}};
        if (lc_data) out["quotient_lc"]["l"] = *cfg.l;
      }
    }
    emit_json(out);
  } else if (cfg.format == "tsv") {
    std::cout << "quantity\ti\tdim\n";
    for (std::size_t i = 0; i < hilbert.size(); ++i) std::cout << "hilbert\t" << i << '\t' << hilbert[i] << '\n';
    for (auto [i, v] : quotient) std::cout << "quotient_hilbert\t" << i << '\t' << v << '\n';
    for (auto [i, v] : lc) std::cout << "quotient_lc\t" << i << '\t' << v << '\n';
  } else {
    std::cout << "Hilbert function in degrees 0.." << top << ": " << join(hilbert) << '\n';
    if (cfg.m) {
      std::vector<std::size_t> q, v;
      for (auto [i, dim] : quotient) q.push_back(dim);
      std::cout << "quotient by " << *cfg.m << " forms, degrees " << *cfg.m + 1 << ".." << *cfg.m + top << ": "
                << join(q) << '\n';
      if (!lc.empty()) {
        for (auto [i, dim] : lc) v.push_back(dim);
        std::cout << "quotient local cohomology, degrees -1..-" << top << ": " << join(v)
                  << (user_data ? "  (formula asserted only for large i)" : "") << '\n';
      }
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Face rings of simplicial complexes: singularities, local cohomology, generic quotients"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub, const char* input_help) {
    sub->add_option("input", cfg.input, input_help)->required();
    sub->add_option("--field", cfg.field, "q or fp:<prime>")->capture_default_str();
    sub->add_option("--format", cfg.format, "json, tsv or pretty")
        ->check(CLI::IsMember({"json", "tsv", "pretty"}))
        ->capture_default_str();
  };

  auto* analyze = app.add_subcommand("analyze", "singular faces, CM/Buchsbaum and CM-in-codimension profile");
  common(analyze, "complex JSON file");

  auto* lc = app.add_subcommand("lc", "Hilbert series and graded dimensions of local cohomology");
  common(lc, "complex JSON file");
  lc->add_option("--cutoff", cfg.cutoff, "largest degree magnitude to tabulate (default 6)");

  auto* predict = app.add_subcommand("predict", "local cohomology of the generic quotient by m linear forms");
  common(predict, "complex JSON file");
  predict->add_option("--m", cfg.m, "number of linear forms")->required();
  predict->add_option("--cutoff", cfg.cutoff, "largest i in degree -i (default 5)");

  auto* reduce = app.add_subcommand("reduce", "Hilbert function of k[Δ]/(θ_1..θ_m) by linear algebra");
  common(reduce, "complex JSON file");
  reduce->add_option("--m", cfg.m, "number of linear forms")->required();
  reduce->add_option("--cutoff", cfg.cutoff, "largest degree (default 6)");
  reduce->add_option("--trials", cfg.trials, "with 2 or more, compare independent random coefficient choices");
  reduce->add_option("--seed", cfg.seed, "seed for sampled coefficients");
  reduce->add_option("--max-basis", cfg.max_basis, "refuse monomial bases larger than this")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the identity checks and print a ledger");
  common(verify, "complex JSON file, or 'corpus' for the built-in fixtures");
  verify->add_option("--check", cfg.checks, "restrict to the named checks")
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--m", cfg.m, "only this number of linear forms");
  verify->add_option("--m-max", cfg.m_max, "largest m in the kernel checks")->capture_default_str();
  verify->add_option("--l", cfg.l, "only this cohomological degree");
  verify->add_option("--i", cfg.i_range, "degree range a..b for the kernel checks");
  verify->add_option("--seed", cfg.seed, "seed for sampled coefficients over F_p")->capture_default_str();

  auto* sqfree = app.add_subcommand("sqfree", "Hilbert functions from squarefree-degree data");
  common(sqfree, "complex JSON file or squarefree data JSON file");
  sqfree->add_option("--m", cfg.m, "number of linear forms");
  sqfree->add_option("--l", cfg.l, "cohomological degree for the quotient local cohomology (complex input)");
  sqfree->add_option("--cutoff", cfg.cutoff, "number of degrees to tabulate (default 6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const FieldSpec field = FieldSpec::parse(cfg.field);
    if (analyze->parsed()) return cmd_analyze(cfg, field);
    if (lc->parsed()) return cmd_lc(cfg, field);
    if (predict->parsed()) return cmd_predict(cfg, field);
    if (reduce->parsed()) return cmd_reduce(cfg, field);
    if (verify->parsed()) return cmd_verify(cfg, field);
    if (sqfree->parsed()) return cmd_sqfree(cfg, field);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const SizeLimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
