#include "facering/verify.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "facering/artinian.hpp"
#include "facering/cohomology.hpp"
#include "facering/generic.hpp"
#include "facering/local_cohomology.hpp"
#include "facering/quotient.hpp"
#include "facering/singularity.hpp"
#include "facering/sqfree.hpp"

namespace facering {

namespace {

constexpr int kLcDegrees = 5;       // i = 1..5 for the quotient formulas
constexpr int kCoarseDegrees = 6;   // j = 0..6 for Hilbert series expansions

struct Context {
  const VerifyTarget& target;
  const VerifyOptions& options;
  CohomologyEngine engine;
  int d;
  std::vector<VerifyRecord> records;

  Context(const VerifyTarget& t, const VerifyOptions& o)
      : target(t), options(o), engine(t.complex, o.field), d(t.complex.dimension() + 1) {}

  void add(std::string_view suite, Json params, Json lhs, Json rhs) {
    bool pass = true;
    const Json* first = nullptr;
    for (const Json* side : {&lhs, &rhs}) {
      for (const auto& [key, value] : side->items()) {
        if (first == nullptr) first = &value;
        else if (value != *first) pass = false;
      }
    }
    records.push_back({std::string(suite), target.name, std::move(params), std::move(lhs), std::move(rhs), pass});
  }

  std::vector<int> ms(int lo, int hi) const {
    if (options.m) {
      if (*options.m >= lo && *options.m <= hi) return {*options.m};
      return {};
    }
    std::vector<int> out;
    for (int m = lo; m <= hi; ++m) out.push_back(m);
    return out;
  }
};

/// Coefficients for a check. Attempt 0 is the default choice; later attempts
/// draw fresh coefficients (only meaningful over F_p).
GenericCoefficients coefficients(const Context& ctx, int columns, int attempt) {
  const std::uint64_t seed = ctx.options.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt);
  return make_generic(ctx.target.complex.n(), columns, ctx.options.field, seed);
}

bool may_retry(const Context& ctx) { return !ctx.options.field.is_rational(); }

void lemma_equality(Context& ctx, bool surjectivity) {
  const int top_m = std::min(ctx.options.m.value_or(ctx.options.m_max), ctx.d);
  if (top_m < 0) return;
  GenericCoefficients a = coefficients(ctx, top_m + 1, 0);
  GenericCoefficients fresh;
  bool have_fresh = false;
  for (int l = 1; l <= ctx.d; ++l) {
    if (ctx.options.l && *ctx.options.l != l) continue;
    for (int m : ctx.ms(0, top_m)) {
      const int lo = ctx.options.i_range ? std::max(ctx.options.i_range->first, m) : m;
      const int hi = ctx.options.i_range ? ctx.options.i_range->second : m + 3;
      for (int i = surjectivity ? std::max(lo, m + 1) : lo; i <= hi; ++i) {
        auto measure = [&](const GenericCoefficients& c) {
          return surjectivity ? surjectivity_rank(ctx.engine, l, m, i, c) : kernel_dim_bruteforce(ctx.engine, l, m, i, c);
        };
        const std::size_t formula = kernel_dim_formula(ctx.engine, l, m, surjectivity ? i - 1 : i);
        std::size_t brute = measure(a);
        bool retried = false;
        if (brute != formula && may_retry(ctx)) {
          if (!have_fresh) {
            fresh = coefficients(ctx, top_m + 1, 1);
            have_fresh = true;
          }
          brute = measure(fresh);
          retried = true;
        }
        Json params{{"l", l}, {"m", m}, {"i", i}};
        if (retried) params["retried_with_fresh_coefficients"] = true;
        if (surjectivity) {
          ctx.add("surjectivity", std::move(params), Json{{"surjectivity_rank", brute}},
                  Json{{"kernel_dim_formula_at_i_minus_1", formula}});
        } else {
          ctx.add("lemma-equality", std::move(params), Json{{"kernel_dim_bruteforce", brute}},
                  Json{{"kernel_dim_formula", formula}});
        }
      }
    }
  }
}

bool pole_orders_at_most(const CohomologyEngine& engine, int d, int m) {
  for (int i = 0; i < d; ++i) {
    if (lc_hilbert_series(engine, i).pole_order() > m) return false;
  }
  return true;
}

void theorem_main(Context& ctx) {
  const SingularityDim s = singularity_dimension(ctx.target.complex, ctx.options.field);
  const int r = ctx.d - 1;
  for (int m : ctx.ms(0, ctx.d)) {
    ctx.add("theorem-main", Json{{"m", m}, {"singularity_dimension", s.to_string()}},
            Json{{"singularity_dimension_below_m", s < m}},
            Json{{"predicts_finite_lc", predicts_finite_lc(ctx.engine, m)},
                 {"pole_orders_at_most_m", pole_orders_at_most(ctx.engine, ctx.d, m)},
                 {"cm_in_codim_r_minus_m", cm_in_codim(ctx.target.complex, r - m, ctx.options.field)}});
  }
}

void singdim_chain(Context& ctx) {
  const SingularityDim s = singularity_dimension(ctx.target.complex, ctx.options.field);
  const int r = ctx.d - 1;
  for (int m : ctx.ms(0, r + 1)) {
    ctx.add("singdim-chain", Json{{"m", m}, {"c", r - m}, {"singularity_dimension", s.to_string()}},
            Json{{"singularity_dimension_below_m", s < m}},
            Json{{"cm_in_codim", cm_in_codim(ctx.target.complex, r - m, ctx.options.field)}});
  }
}

void grabe_link(Context& ctx) {
  for (Face f : ctx.target.complex.faces()) {
    const SimplicialComplex link = ctx.target.complex.link(f);
    Json relative = Json::array(), reduced = Json::array();
    for (int i = 0; i <= ctx.d; ++i) {
      relative.push_back(ctx.engine.relative_dim(f, i - 1));
      reduced.push_back(reduced_cohomology_dim(link, i - 1 - f.size(), ctx.options.field));
    }
    ctx.add("grabe-link", Json{{"face", f.to_string()}, {"i", Json::array({0, ctx.d})}},
            Json{{"relative_cohomology_dims", std::move(relative)}}, Json{{"link_reduced_cohomology_dims", std::move(reduced)}});
  }
}

void hochster_coarse(Context& ctx) {
  for (int i = 0; i <= ctx.d; ++i) {
    const HilbertSeries series = lc_hilbert_series(ctx.engine, i);
    Json coeffs = Json::array(), closed = Json::array(), enumerated = Json::array();
    for (int j = 0; j <= kCoarseDegrees; ++j) {
      coeffs.push_back(series.coefficient(j));
      closed.push_back(static_cast<std::int64_t>(lc_coarse_dim(ctx.engine, i, -j)));
      enumerated.push_back(static_cast<std::int64_t>(lc_graded_piece(ctx.engine, i, j).total_dim));
    }
    ctx.add("hochster-coarse", Json{{"i", i}, {"j", Json::array({0, kCoarseDegrees})}},
            Json{{"series_coefficients", std::move(coeffs)}},
            Json{{"closed_formula", std::move(closed)}, {"block_enumeration", std::move(enumerated)}});
  }
}

void kernel_identification(Context& ctx) {
  for (int m : ctx.ms(0, ctx.d)) {
    for (int l = 1; l <= ctx.d - m; ++l) {
      if (ctx.options.l && *ctx.options.l != l) continue;
      Json predicted = Json::array(), kernel = Json::array();
      for (int i = 1; i <= kLcDegrees; ++i) {
        predicted.push_back(quotient_lc_dim(ctx.engine, m, l, i));
        kernel.push_back(kernel_dim_formula(ctx.engine, l + m, m, i + m - 1));
      }
      ctx.add("kernel-identification", Json{{"m", m}, {"l", l}, {"i", Json::array({1, kLcDegrees})}},
              Json{{"quotient_lc_dim", std::move(predicted)}}, Json{{"kernel_dim_formula", std::move(kernel)}});
    }
  }
}

std::vector<std::size_t> sqfree_tail(const SqfreeData& ring, int m) {
  std::vector<std::size_t> out;
  for (int i = m + 1; i <= m + 4; ++i) out.push_back(sqfree_quotient_hilbert(ring, m, i));
  return out;
}

std::vector<std::size_t> reduction_tail(const SimplicialComplex& c, const GenericCoefficients& a, int m) {
  const ReductionHilbert r = reduction_hilbert(c, a, m, m + 4);
  return {r.dims.begin() + m + 1, r.dims.end()};
}

void artinian_vs_sqfree(Context& ctx) {
  if (ctx.d < 1) return;
  const SqfreeData ring = sqfree_data_of_face_ring(ctx.target.complex);
  const GenericCoefficients a = coefficients(ctx, ctx.d, 0);
  for (int m : ctx.ms(1, ctx.d)) {
    const auto predicted = sqfree_tail(ring, m);
    auto observed = reduction_tail(ctx.target.complex, a, m);
    Json params{{"m", m}, {"degrees", Json::array({m + 1, m + 4})}};
    if (observed != predicted && may_retry(ctx)) {
      observed = reduction_tail(ctx.target.complex, coefficients(ctx, ctx.d, 1), m);
      params["retried_with_fresh_coefficients"] = true;
    }
    ctx.add("artinian-vs-sqfree", std::move(params), Json{{"reduction_hilbert", observed}},
            Json{{"sqfree_quotient_hilbert", predicted}});
  }
}

void cm_anchor(Context& ctx) {
  if (ctx.target.complex.is_void() || !is_cm(ctx.target.complex, ctx.options.field)) return;
  const int cutoff = ctx.d + 2;
  const ReductionHilbert r = reduction_hilbert(ctx.target.complex, coefficients(ctx, ctx.d, 0), ctx.d, cutoff);
  std::vector<std::int64_t> h = ctx.target.complex.h_vector();
  h.resize(cutoff + 1, 0);
  Json observed = Json::array();
  for (std::size_t v : r.dims) observed.push_back(static_cast<std::int64_t>(v));
  ctx.add("cm-anchor", Json{{"m", ctx.d}, {"cutoff", cutoff}}, Json{{"reduction_hilbert", std::move(observed)}},
          Json{{"h_vector_padded", h}});
}

void tsqfree(Context& ctx) {
  for (int m : ctx.ms(0, ctx.d)) {
    for (int l = 1; l <= ctx.d - m; ++l) {
      if (ctx.options.l && *ctx.options.l != l) continue;
      const SqfreeData data = sqfree_lc_data(ctx.target.complex, l + m, ctx.options.field);
      Json lhs = Json::array(), rhs = Json::array();
      for (int i = 1; i <= kLcDegrees; ++i) {
        lhs.push_back(sqfree_quotient_lc(data, m, i));
        rhs.push_back(quotient_lc_dim(ctx.engine, m, l, i));
      }
      ctx.add("tsqfree", Json{{"m", m}, {"l", l}, {"i", Json::array({1, kLcDegrees})}},
              Json{{"sqfree_quotient_lc", std::move(lhs)}}, Json{{"quotient_lc_dim", std::move(rhs)}});
    }
  }
}

void isolated(Context& ctx) {
  const SimplicialComplex& c = ctx.target.complex;
  if (c.is_void() || ctx.d < 1) return;
  if (singularity_dimension(c, ctx.options.field) > 0) return;
  const std::vector<std::int64_t> ones(c.n(), 1);
  for (int l = 1; l < ctx.d - 1; ++l) {
    const IsolatedDims dims = isolated_quotient_dims(ctx.engine, ones, l);
    Json negative = Json::array(), predicted = Json::array();
    for (int i = 1; i <= kLcDegrees; ++i) {
      negative.push_back(dims.negative);
      predicted.push_back(quotient_lc_dim(ctx.engine, 1, l, i));
    }
    ctx.add("isolated",
            Json{{"l", l},
                 {"theta", "all-ones"},
                 {"graded_dims", Json::array({dims.negative, dims.degree_zero, dims.degree_one})},
                 {"i", Json::array({1, kLcDegrees})}},
            Json{{"isolated_negative_degrees", std::move(negative)}}, Json{{"quotient_lc_dim_m1", std::move(predicted)}});
  }
  if (is_homologically_isolated(ctx.engine)) {
    const DeterminacyResult probe = determinacy_probe(c, ctx.d, 3, ctx.d + 2, ctx.options.field, ctx.options.seed);
    ctx.add("isolated", Json{{"m", ctx.d}, {"trials", 3}, {"cutoff", ctx.d + 2}, {"dims", probe.trials.front().dims}},
            Json{{"homologically_isolated", true}}, Json{{"hilbert_function_constant", probe.constant}});
  }
}

const std::vector<std::pair<std::string, void (*)(Context&)>>& suites() {
  static const std::vector<std::pair<std::string, void (*)(Context&)>> table = {
      {"lemma-equality", [](Context& c) { lemma_equality(c, false); }},
      {"surjectivity", [](Context& c) { lemma_equality(c, true); }},
      {"theorem-main", theorem_main},
      {"singdim-chain", singdim_chain},
      {"grabe-link", grabe_link},
      {"hochster-coarse", hochster_coarse},
      {"kernel-identification", kernel_identification},
      {"artinian-vs-sqfree", artinian_vs_sqfree},
      {"cm-anchor", cm_anchor},
      {"tsqfree", tsqfree},
      {"isolated", isolated},
  };
  return table;
}

void require_known(std::string_view name) {
  for (const auto& [suite, fn] : suites()) {
    if (suite == name) return;
  }
  throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

std::vector<VerifyRecord> run_target(const VerifyTarget& target, const VerifyOptions& options) {
  Context ctx(target, options);
  for (const auto& [suite, fn] : suites()) {
    if (options.checks.empty() || std::ranges::find(options.checks, suite) != options.checks.end()) fn(ctx);
  }
  return std::move(ctx.records);
}

}  // namespace

bool Ledger::all_pass() const { return failures() == 0; }

std::size_t Ledger::failures() const {
  return static_cast<std::size_t>(std::ranges::count_if(records, [](const VerifyRecord& r) { return !r.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [suite, fn] : suites()) out.push_back(suite);
    return out;
  }();
  return names;
}

std::vector<VerifyRecord> run_suite(std::string_view suite, const VerifyTarget& target, const VerifyOptions& options) {
  require_known(suite);
  VerifyOptions only = options;
  only.checks = {std::string(suite)};
  return run_target(target, only);
}

Ledger run_verification(std::span<const VerifyTarget> targets, const VerifyOptions& options) {
  for (const std::string& check : options.checks) require_known(check);
  std::vector<std::future<std::vector<VerifyRecord>>> pending;
  pending.reserve(targets.size());
  for (const VerifyTarget& target : targets) {
    pending.push_back(std::async(std::launch::async, [&target, &options] { return run_target(target, options); }));
  }
  Ledger ledger;
  for (auto& f : pending) {
    auto records = f.get();
    std::ranges::move(records, std::back_inserter(ledger.records));
  }
  return ledger;
}

Json ledger_to_json(const Ledger& ledger, const VerifyOptions& options) {
  Json records = Json::array();
  for (const VerifyRecord& r : ledger.records) {
    records.push_back(Json{{"suite", r.suite},
                           {"complex", r.complex},
                           {"params", r.params},
                           {"lhs", r.lhs},
                           {"rhs", r.rhs},
                           {"pass", r.pass}});
  }
  return Json{{"field", options.field.to_string()},
              {"seed", options.seed},
              {"m_max", options.m_max},
              {"records", std::move(records)},
              {"summary", Json{{"records", ledger.records.size()}, {"failed", ledger.failures()}}},
              {"pass", ledger.all_pass()}};
}

}  // namespace facering
