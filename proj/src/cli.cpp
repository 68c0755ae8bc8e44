#include "fourier_l1/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fourier_l1/analysis.hpp"
#include "fourier_l1/conditions.hpp"
#include "fourier_l1/error.hpp"
#include "fourier_l1/families.hpp"
#include "fourier_l1/format.hpp"
#include "fourier_l1/identities.hpp"
#include "fourier_l1/kernels.hpp"

namespace fourier_l1 {

namespace {

using nlohmann::json;

const std::vector<double> kDefaultLambdas = {2.0, 1.5, 1.25};
const std::vector<int> kDefaultNRange = {4, 8, 16, 32, 64};

std::pair<int, int> parse_mn(const std::string& item) {
  const auto colon = item.find(':');
  const auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) {
      fail(ErrorKind::usage, "--mn: cannot parse '" + item + "' (expected M or M:N)");
    }
    return v;
  };
  if (colon == std::string::npos) {
    const int m = to_int(item);
    return {m, m};
  }
  return {to_int(item.substr(0, colon)), to_int(item.substr(colon + 1))};
}

/// Collects the results of one command in a form both writers share.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;  // numbers, strings or null
};

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_number_integer() || v.is_number_unsigned()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_real(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.get<std::string>();
}

std::string metadata_line(const std::string& key, const json& value) {
  return "# " + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
}

std::string render(const CommandSpec& spec, const json& metadata, const json& summary,
                   const Table& table) {
  if (spec.format == OutputFormat::json) {
    json doc;
    doc["command"] = spec.subcommand;
    doc["metadata"] = metadata;
    if (!summary.is_null()) doc["summary"] = summary;
    json results = json::array();
    for (const auto& row : table.rows) {
      json obj = json::object();
      for (std::size_t c = 0; c < table.columns.size(); ++c) obj[table.columns[c]] = row[c];
      results.push_back(obj);
    }
    doc["results"] = results;
    return doc.dump(2) + "\n";
  }
  std::string out = metadata_line("command", spec.subcommand);
  for (const auto& [k, v] : metadata.items()) out += metadata_line(k, v);
  if (!summary.is_null())
    for (const auto& [k, v] : summary.items()) out += metadata_line(k, v);
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    out += (c ? "," : "") + table.columns[c];
  out += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + csv_cell(row[c]);
    out += "\n";
  }
  return out;
}

FamilySpec grid_as_family(const CoefficientGrid& grid) {
  FiniteFamily f;
  for (int j = -grid.bound_j(); j <= grid.bound_j(); ++j)
    for (int k = -grid.bound_k(); k <= grid.bound_k(); ++k)
      if (grid(j, k) != cplx{}) f.entries.push_back({j, k, grid(j, k)});
  return f;
}

struct Source {
  FamilySpec family;
  std::optional<CoefficientGrid> file_grid;
  json description;
};

Source load_source(const CommandSpec& spec) {
  if (spec.grid_file) {
    CoefficientGrid grid = read_grid_file(*spec.grid_file);
    return {grid_as_family(grid), std::move(grid), json{{"gridFile", *spec.grid_file}}};
  }
  FamilySpec family = parse_family_argument(*spec.family);
  json desc;
  to_json(desc, family);
  return {std::move(family), std::nullopt, json{{"family", desc}}};
}

json base_metadata(const CommandSpec& spec, const Source& source) {
  json meta = source.description;
  meta["lambdas"] = spec.lambdas;
  return meta;
}

/// The grid an identity or decomposition check runs on: the file grid as
/// given, or the family built out to the window ends.
CoefficientGrid grid_for(const Source& source, const VPParams& p) {
  if (source.file_grid) return *source.file_grid;
  return build(source.family, p.lambda_m(), p.lambda_n());
}

int run_identities(const CommandSpec& spec, std::ostream& out) {
  const Source source = load_source(spec);
  const double tol = spec.tol > 0.0 ? spec.tol : 1e-9;
  Table table{{"lemma", "m", "n", "lambda", "nx", "ny", "maxAbsResidual", "lhsScale",
               "relativeResidual"},
              {}};
  bool ok = true;
  for (double lambda : spec.lambdas) {
    for (const auto& [m, n] : spec.mn) {
      const VPParams p(lambda, m, n);
      const int nx = spec.nx.value_or(minimum_resolution(p.lambda_m()));
      const int ny = spec.ny.value_or(spec.nx ? *spec.nx : minimum_resolution(p.lambda_n()));
      for (const IdentityReport& r : check_all_identities(grid_for(source, p), p, nx, ny)) {
        ok = ok && r.relative_residual <= tol;
        table.rows.push_back({r.lemma, r.m, r.n, r.lambda, r.nx, r.ny, r.max_abs_residual,
                              r.lhs_scale, r.relative_residual});
      }
    }
  }
  json meta = base_metadata(spec, source);
  meta["resolution"] = spec.nx ? json(*spec.nx) : json("2*lambda_index+3");
  meta["tol"] = tol;
  meta["thirdTermSign"] = "+";
  out << render(spec, meta, nullptr, table);
  return spec.check && !ok ? 2 : 0;
}

int run_conditions(const CommandSpec& spec, std::ostream& out) {
  const Source source = load_source(spec);
  ConditionParams params;
  params.lambdas = spec.lambdas;
  params.n_range = spec.n_range.empty() ? kDefaultNRange : spec.n_range;
  const int n_max = *std::max_element(params.n_range.begin(), params.n_range.end());
  require(n_max >= 1, "--n-range values must be positive");
  const double lambda_max = *std::max_element(params.lambdas.begin(), params.lambdas.end());

  std::optional<CoefficientGrid> grid;
  if (source.file_grid) {
    params.truncation = spec.truncation.value_or(
        std::max({source.file_grid->bound_j(), source.file_grid->bound_k(), n_max}));
    // Past the stored box every coefficient is zero, so padding is exact.
    const int b = std::max(params.truncation,
                           std::max(source.file_grid->bound_j(), source.file_grid->bound_k()));
    grid.emplace(build(source.family, b, b));
  } else {
    int t = floor_lambda(lambda_max, n_max);
    try {
      const auto [J, K] = reference_truncation(source.family, 1e-12);
      t = std::max({t, J, K});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::unavailable) throw;
    }
    params.truncation = spec.truncation.value_or(t);
    const int b = std::max(params.truncation, floor_lambda(lambda_max, n_max)) + 1;
    grid.emplace(build(source.family, b, b));
  }
  params.normalize();

  std::vector<ConditionReport> reports = condition_reports(*grid, params);
  if (spec.decay) reports.push_back(decay_diagnostic(*grid));

  Table table{{"conditionId", "lambda", "n", "truncation", "value"}, {}};
  json summary = json::object();
  bool ok = true;
  for (const ConditionReport& r : reports) {
    std::string id(to_string(r.id));
    summary["verdict." + id] = std::string(to_string(r.verdict));
    ok = ok && r.verdict == Verdict::vanishing_trend;
    for (const ProfileEntry& e : r.profile) {
      table.rows.push_back({e.series.empty() ? id : id + "/" + e.series,
                            e.lambda ? json(*e.lambda) : json(nullptr), e.n, e.truncation,
                            e.value});
    }
  }
  json meta = base_metadata(spec, source);
  meta["lambdas"] = params.lambdas;
  meta["nRange"] = params.n_range;
  meta["truncation"] = params.truncation;
  out << render(spec, meta, summary, table);
  return spec.check && !ok ? 2 : 0;
}

int run_ek_norms(const CommandSpec& spec, std::ostream& out) {
  const int quad = spec.quadrature.value_or(16 * spec.max_k);
  const NormBoundReport report = e_norm_profile(spec.max_k, quad);
  Table table{{"k", "norm", "ratio"}, {}};
  for (const NormBoundEntry& e : report.entries) table.rows.push_back({e.k, e.norm, e.ratio});

  const double top = report.entries.back().ratio;
  const double half = report.entries[static_cast<std::size_t>(spec.max_k / 2 - 1)].ratio;
  const double drift = std::abs(top - half) / top;
  const double e1_error = std::abs(report.entries.front().norm - 8.0);
  json summary{{"estimatedC", report.estimated_c},
               {"argmaxK", report.argmax_k},
               {"refinementDelta", report.refinement_delta},
               {"ratioDrift", drift},
               {"normE1Error", e1_error}};
  json meta{{"maxK", spec.max_k}, {"quadraturePoints", quad}};
  out << render(spec, meta, summary, table);
  const bool ok = std::isfinite(report.estimated_c) && drift < 0.05 && e1_error <= 1e-6;
  return spec.check && !ok ? 2 : 0;
}

int run_decompose(const CommandSpec& spec, std::ostream& out) {
  const Source source = load_source(spec);
  const double tol = spec.tol > 0.0 ? spec.tol : 1e-9;
  Table table{{"m", "n", "lambda", "quad_n", "norm_R0", "norm_R1", "norm_R2", "norm_R3",
               "norm_R4", "norm_R5", "norm_V_S", "relative_residual"},
              {}};
  bool ok = true;
  for (double lambda : spec.lambdas) {
    for (const DecompositionRecord& r :
         decomposition_norm_run(source.family, spec.mn, lambda, spec.nx.value_or(0))) {
      ok = ok && r.relative_residual <= tol;
      std::vector<json> row{r.m, r.n, r.lambda, r.quad_n};
      for (double v : r.component_norms) row.emplace_back(v);
      row.emplace_back(r.norm_vs);
      row.emplace_back(r.relative_residual);
      table.rows.push_back(std::move(row));
    }
  }
  json meta = base_metadata(spec, source);
  meta["resolution"] = spec.nx ? json(*spec.nx) : json("max(64, 2*widest+3)");
  meta["tol"] = tol;
  out << render(spec, meta, nullptr, table);
  return spec.check && !ok ? 2 : 0;
}

int run_converge(const CommandSpec& spec, std::ostream& out) {
  const Source source = load_source(spec);
  RunOptions opts;
  opts.tol = spec.tol > 0.0 ? spec.tol : 1e-7;
  opts.max_n = spec.max_n;
  opts.start_n = spec.nx.value_or(0);
  Table table{{"m", "n", "lambda", "norm_S_f", "norm_sigma_f", "norm_V_f", "norm_V_S", "quad_n",
               "refine_delta"},
              {}};
  bool ok = true;
  for (double lambda : spec.lambdas) {
    for (const ExperimentRecord& r : convergence_run(source.family, spec.mn, lambda, opts)) {
      ok = ok && r.converged;
      table.rows.push_back({r.m, r.n, r.lambda, r.norm_sf, r.norm_sigma_f, r.norm_vf, r.norm_vs,
                            r.quad_n, r.refinement_delta});
    }
  }
  json meta = base_metadata(spec, source);
  meta["tol"] = opts.tol;
  meta["maxN"] = opts.max_n;
  meta["startN"] = opts.start_n > 0 ? json(opts.start_n) : json("max(64, 2*maxFrequency+3)");
  out << render(spec, meta, nullptr, table);
  return spec.check && !ok ? 2 : 0;
}

}  // namespace

std::optional<CommandSpec> parse_command(const std::vector<std::string>& argv, std::ostream& help) {
  CLI::App app{"Numerical checks for L1 convergence of double Fourier series", "fourier-l1"};
  app.require_subcommand(1);

  CommandSpec spec;
  std::vector<std::string> mn_items;
  std::optional<int> m;
  std::optional<int> n;
  std::string format = "csv";
  std::string family;
  std::string grid_file;

  const CLI::Validator lambda_check(
      [](std::string& s) -> std::string {
        try {
          const double v = std::stod(s);
          if (!(v > 1.0) || !std::isfinite(v)) return "lambda must exceed 1 (got " + s + ")";
        } catch (const std::exception&) {
          return "lambda must be a number (got '" + s + "')";
        }
        return {};
      },
      "LAMBDA>1");

  const auto add_source = [&](CLI::App* sub) {
    auto* f = sub->add_option("--family", family,
                              "family shorthand (zero, geometric:RX[,RY], "
                              "randomSparse:SEED,BJ,BK,DENSITY,DECAY) or JSON spec file");
    auto* g = sub->add_option("--grid-file", grid_file, "coefficient file with lines 'j k re im'");
    f->excludes(g);
    g->excludes(f);
    return std::pair{f, g};
  };
  const auto add_window = [&](CLI::App* sub) {
    sub->add_option("--m", m, "window index m")->check(CLI::PositiveNumber);
    sub->add_option("--n", n, "window index n (default m)")->check(CLI::PositiveNumber);
    sub->add_option("--mn", mn_items, "comma-separated list of M or M:N")->delimiter(',');
    sub->add_option("--lambda", spec.lambdas, "comma-separated lambdas (default 2,1.5,1.25)")
        ->delimiter(',')
        ->check(lambda_check);
  };
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", spec.output, "write to this file instead of stdout");
    sub->add_flag("--check", spec.check, "exit with status 2 when the gate fails");
  };

  std::vector<std::pair<CLI::App*, std::pair<CLI::Option*, CLI::Option*>>> sourced;

  auto* ident = app.add_subcommand("identities", "pointwise residuals of the representation identities");
  sourced.push_back({ident, add_source(ident)});
  add_window(ident);
  ident->add_option("--nx", spec.nx, "samples along x")->check(CLI::PositiveNumber);
  ident->add_option("--ny", spec.ny, "samples along y")->check(CLI::PositiveNumber);
  ident->add_option("--tol", spec.tol, "relative residual gate (default 1e-9)")->check(CLI::PositiveNumber);
  add_common(ident);

  auto* cond = app.add_subcommand("conditions", "profiles of the double-series conditions");
  sourced.push_back({cond, add_source(cond)});
  cond->add_option("--lambda", spec.lambdas, "comma-separated lambdas (default 2,1.5,1.25)")
      ->delimiter(',')
      ->check(lambda_check);
  cond->add_option("--n-range", spec.n_range, "comma-separated probed indices")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  cond->add_option("--truncation", spec.truncation, "cap on the unbounded sums")
      ->check(CLI::NonNegativeNumber);
  cond->add_flag("--decay", spec.decay, "include the coefficient decay diagnostic");
  add_common(cond);

  auto* ek = app.add_subcommand("ek-norms", "L1 norms of the one-sided kernels E_k");
  ek->add_option("--max-k", spec.max_k, "largest k (default 512)")->check(CLI::Range(2, 1 << 16));
  ek->add_option("--quadrature", spec.quadrature, "quadrature nodes (default 16 * max-k)")
      ->check(CLI::PositiveNumber);
  add_common(ek);

  auto* dec = app.add_subcommand("decompose", "L1 norms of the six components of V - S");
  sourced.push_back({dec, add_source(dec)});
  add_window(dec);
  dec->add_option("--nx", spec.nx, "quadrature nodes per axis")->check(CLI::PositiveNumber);
  dec->add_option("--tol", spec.tol, "relative residual gate (default 1e-9)")->check(CLI::PositiveNumber);
  add_common(dec);

  auto* conv = app.add_subcommand("converge", "norms of S - f, sigma - f, V - f and V - S");
  sourced.push_back({conv, add_source(conv)});
  add_window(conv);
  conv->add_option("--nx", spec.nx, "starting quadrature nodes per axis")->check(CLI::PositiveNumber);
  conv->add_option("--tol", spec.tol, "refinement tolerance (default 1e-7)")->check(CLI::PositiveNumber);
  conv->add_option("--max-n", spec.max_n, "largest quadrature resolution (default 4096)")
      ->check(CLI::PositiveNumber);
  add_common(conv);

  std::vector<std::string> args(argv.rbegin(), argv.rend() - (argv.empty() ? 0 : 1));
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    help << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    help << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    fail(ErrorKind::usage, e.what());
  }

  for (auto* sub : app.get_subcommands()) spec.subcommand = sub->get_name();
  spec.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  if (spec.lambdas.empty()) spec.lambdas = kDefaultLambdas;
  for (auto& [sub, opts] : sourced) {
    if (sub->get_name() != spec.subcommand) continue;
    if (opts.first->count() == 0 && opts.second->count() == 0) {
      fail(ErrorKind::usage, "one of --family or --grid-file is required");
    }
    if (opts.first->count()) spec.family = family;
    if (opts.second->count()) spec.grid_file = grid_file;
  }
  const bool windowed =
      spec.subcommand == "identities" || spec.subcommand == "decompose" || spec.subcommand == "converge";
  if (windowed) {
    if (!mn_items.empty() && (m || n)) fail(ErrorKind::usage, "--mn excludes --m/--n");
    if (n && !m) fail(ErrorKind::usage, "--n requires --m");
    if (m) spec.mn.emplace_back(*m, n.value_or(*m));
    for (const std::string& item : mn_items) {
      const auto pair = parse_mn(item);
      if (pair.first < 1 || pair.second < 1) fail(ErrorKind::usage, "--mn: indices must be positive");
      spec.mn.push_back(pair);
    }
    if (spec.mn.empty()) fail(ErrorKind::usage, "--m or --mn is required");
  }
  return spec;
}

int run_command(const CommandSpec& spec, std::ostream& out) {
  std::ostringstream buffer;
  int status = 0;
  if (spec.subcommand == "identities") status = run_identities(spec, buffer);
  else if (spec.subcommand == "conditions") status = run_conditions(spec, buffer);
  else if (spec.subcommand == "ek-norms") status = run_ek_norms(spec, buffer);
  else if (spec.subcommand == "decompose") status = run_decompose(spec, buffer);
  else if (spec.subcommand == "converge") status = run_converge(spec, buffer);
  else fail(ErrorKind::usage, "unknown subcommand '" + spec.subcommand + "'");

  if (spec.output) {
    std::ofstream file(*spec.output, std::ios::binary);
    if (!file) fail(ErrorKind::invalid_argument, "cannot write '" + *spec.output + "'");
    file << buffer.str();
    if (!file) fail(ErrorKind::invalid_argument, "failed writing '" + *spec.output + "'");
  } else {
    out << buffer.str();
  }
  return status;
}

int cli_main(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  try {
    const std::optional<CommandSpec> spec = parse_command(argv, out);
    if (!spec) return 0;
    return run_command(*spec, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace fourier_l1
