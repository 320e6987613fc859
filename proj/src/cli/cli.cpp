#include "hetbell/cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hetbell/classical.hpp"
#include "hetbell/cli/output.hpp"
#include "hetbell/errors.hpp"
#include "hetbell/grid.hpp"
#include "hetbell/hetero.hpp"

namespace hetbell::cli {

namespace {

struct CommonOptions {
  std::string dist;
  std::string lambda;
  std::string format = "json";
  std::string out_path;
};

std::optional<Distribution> parse_dist(const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  return Distribution::parse(spec);
}

const Distribution& require_dist(const std::optional<Distribution>& d, const std::string& what) {
  if (!d) throw MissingDistribution(what + " needs --dist");
  return *d;
}

Rational require_lambda(const std::string& text, const std::string& what) {
  if (text.empty()) throw ParseError(what + " needs --lambda");
  return Rational::parse(text);
}

Route parse_route(const std::string& name) {
  for (Route r : {Route::Direct, Route::ViaStirlingTransform, Route::ViaPartialBell}) {
    if (route_name(r) == name) return r;
  }
  throw ParseError("unknown route '" + name + "'");
}

void add_common(CLI::App* cmd, CommonOptions& opts, bool csv_allowed) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember(csv_allowed ? std::vector<std::string>{"csv", "json"} : std::vector<std::string>{"json"}));
  cmd->add_option("--out", opts.out_path, "Write output to this file instead of stdout");
}

OutputRecord cmd_table(const std::string& family, std::size_t n_max, const CommonOptions& opts,
                       const std::string& route_text) {
  OutputRecord record;
  record.command = "table";
  record.params.emplace_back("family", family);
  record.params.emplace_back("n_max", std::to_string(n_max));

  const auto dist = parse_dist(opts.dist);
  const bool probabilistic = family.rfind("prob_", 0) == 0;
  const bool needs_lambda = family == "deg_stirling1" || family == "hetero" || family == "prob_hetero";
  if (probabilistic) {
    require_dist(dist, "table " + family);
    record.params.emplace_back("dist", dist->str());
  }
  Rational lambda;
  if (needs_lambda) {
    lambda = require_lambda(opts.lambda, "table " + family);
    record.params.emplace_back("lambda", lambda.str());
  }
  const Route route = parse_route(route_text);
  if (family == "prob_hetero") record.params.emplace_back("route", std::string(route_name(route)));

  for (std::size_t n = 0; n <= n_max; ++n) {
    std::vector<Rational> row(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      if (family == "stirling2") row[k] = stirling2(n, k);
      else if (family == "stirling1u") row[k] = stirling1u(n, k);
      else if (family == "lah") row[k] = lah(n, k);
      else if (family == "deg_stirling1") row[k] = deg_stirling1(n, k, lambda);
      else if (family == "hetero") row[k] = hetero_stirling(n, k, lambda);
      else if (family == "prob_stirling2") row[k] = prob_stirling2(*dist, n, k);
      else if (family == "prob_lah") row[k] = prob_lah(*dist, n, k);
      else if (family == "prob_hetero") row[k] = prob_hetero_stirling(*dist, n, k, lambda, route);
      else throw ParseError("unknown family '" + family + "'");
    }
    record.rows.push_back(std::move(row));
  }
  return record;
}

OutputRecord cmd_poly(const std::string& kind, std::size_t n, std::size_t k, const CommonOptions& opts) {
  OutputRecord record;
  record.command = "poly";
  record.params.emplace_back("kind", kind);
  record.params.emplace_back("n", std::to_string(n));
  if (k > 0) record.params.emplace_back("k", std::to_string(k));

  const auto dist = parse_dist(opts.dist);
  Polynomial p;
  if (kind == "bell") {
    p = bell_poly(n).derivative(k);
  } else if (kind == "lahbell") {
    p = lah_bell_poly(n).derivative(k);
  } else if (kind == "hetero_bell") {
    const Rational lambda = require_lambda(opts.lambda, "poly hetero_bell");
    record.params.emplace_back("lambda", lambda.str());
    p = hetero_bell_poly(n, lambda).derivative(k);
  } else if (kind == "prob_hetero_bell") {
    const Distribution& d = require_dist(dist, "poly prob_hetero_bell");
    const Rational lambda = require_lambda(opts.lambda, "poly prob_hetero_bell");
    record.params.emplace_back("dist", d.str());
    record.params.emplace_back("lambda", lambda.str());
    if (k == 0) p = prob_hetero_bell_poly(d, n, lambda);
    else if (k <= n) p = hetero_derivative(d, n, lambda, k);
  } else {
    throw ParseError("unknown polynomial kind '" + kind + "'");
  }

  const std::size_t width = k <= n ? n - k + 1 : 1;
  std::vector<Rational> coeffs(width);
  for (std::size_t i = 0; i < width; ++i) coeffs[i] = p.coefficient(i);
  record.rows.push_back(std::move(coeffs));
  return record;
}

OutputRecord cmd_dobinski(std::size_t n, const std::string& x_text, double tol, const CommonOptions& opts) {
  const auto dist = parse_dist(opts.dist);
  const Distribution& d = require_dist(dist, "dobinski");
  const Rational lambda = require_lambda(opts.lambda, "dobinski");
  const Rational x = Rational::parse(x_text);

  OutputRecord record;
  record.command = "dobinski";
  record.params = {{"dist", d.str()}, {"n", std::to_string(n)}, {"lambda", lambda.str()}, {"x", x.str()}};

  const DobinskiResult approx = dobinski_eval(d, n, lambda, x, tol);
  DobinskiPayload payload;
  payload.value = approx.value;
  payload.rel_tol = tol;
  payload.last_term = approx.last_term;
  payload.truncation_bound = approx.truncation_bound;
  payload.rounding_bound = approx.rounding_bound;
  payload.exact = prob_hetero_bell_poly(d, n, lambda)(x);
  const double exact = payload.exact.to_double();
  payload.relative_error = exact == 0 ? std::fabs(approx.value) : std::fabs(approx.value - exact) / std::fabs(exact);
  record.dobinski = payload;
  return record;
}

OutputRecord cmd_verify(const std::vector<std::string>& tags, const std::string& config_path, bool failures_only) {
  std::vector<Identity> ids;
  const bool all = tags.empty() || std::find(tags.begin(), tags.end(), "all") != tags.end();
  if (all) {
    ids = all_identities();
  } else {
    for (const auto& tag : tags) ids.push_back(identity_from_tag(tag));
  }
  const VerifyGrid grid = config_path.empty() ? VerifyGrid::shipped() : VerifyGrid::parse_file(config_path);

  OutputRecord record;
  record.command = "verify";
  std::string joined;
  for (Identity id : ids) {
    if (!joined.empty()) joined += ',';
    joined += identity_tag(id);
  }
  record.params = {{"ids", all ? std::string("all") : joined},
                   {"config", config_path.empty() ? std::string("shipped") : config_path},
                   {"grid_version", std::to_string(grid.version())}};
  record.reports = run_verification(ids, grid);
  record.failures_only = failures_only;
  return record;
}

void emit(const OutputRecord& record, const CommonOptions& opts, std::ostream& out) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!opts.out_path.empty()) {
    file.open(opts.out_path);
    if (!file) throw ParseError("cannot open output file '" + opts.out_path + "'");
    sink = &file;
  }
  if (opts.format == "csv") {
    *sink << to_csv(record);
  } else {
    *sink << to_json(record).dump(2) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact heterogeneous Stirling numbers, Bell polynomials and their probabilistic versions"};
  app.name("hetbell");
  app.require_subcommand(1);

  CommonOptions table_opts;
  std::string family;
  std::size_t n_max = 0;
  std::string route = "direct";
  auto* table = app.add_subcommand("table", "Rows 0..nmax of a number triangle");
  table
      ->add_option("family", family, "Triangle family")
      ->required()
      ->check(CLI::IsMember({"stirling2", "stirling1u", "lah", "deg_stirling1", "hetero", "prob_stirling2",
                             "prob_lah", "prob_hetero"}));
  table->add_option("--nmax", n_max, "Last row")->required();
  table->add_option("--lambda", table_opts.lambda, "Degeneracy parameter a/b");
  table->add_option("--dist", table_opts.dist, "Distribution spec");
  table->add_option("--route", route, "Route for prob_hetero")
      ->check(CLI::IsMember({"direct", "stirling-transform", "partial-bell"}));
  add_common(table, table_opts, true);

  CommonOptions poly_opts;
  std::string kind;
  std::size_t poly_n = 0;
  std::size_t poly_k = 0;
  auto* poly = app.add_subcommand("poly", "Coefficients of a Bell-type polynomial");
  poly->add_option("kind", kind, "Polynomial family")
      ->required()
      ->check(CLI::IsMember({"bell", "lahbell", "hetero_bell", "prob_hetero_bell"}));
  poly->add_option("--n", poly_n, "Index n")->required();
  poly->add_option("--k", poly_k, "Derivative order (default 0)");
  poly->add_option("--lambda", poly_opts.lambda, "Degeneracy parameter a/b");
  poly->add_option("--dist", poly_opts.dist, "Distribution spec");
  add_common(poly, poly_opts, true);

  CommonOptions verify_opts;
  std::vector<std::string> tags;
  std::string config_path;
  bool failures_only = false;
  auto* verify = app.add_subcommand("verify", "Check every identity over the parameter grid");
  verify->add_option("ids", tags, "Identity tags, or 'all' (default)");
  verify->add_option("--config", config_path, "Grid config file (default: the shipped grid)");
  verify->add_flag("--failures-only", failures_only, "Omit passing reports from the output");
  add_common(verify, verify_opts, false);

  CommonOptions dob_opts;
  std::size_t dob_n = 0;
  std::string dob_x;
  double tol = 1e-12;
  auto* dobinski = app.add_subcommand("dobinski", "Truncated Dobinski-type series against the exact value");
  dobinski->add_option("--dist", dob_opts.dist, "Bounded distribution spec")->required();
  dobinski->add_option("--n", dob_n, "Index n")->required();
  dobinski->add_option("--lambda", dob_opts.lambda, "Degeneracy parameter a/b")->required();
  dobinski->add_option("--x", dob_x, "Evaluation point a/b")->required();
  dobinski->add_option("--tol", tol, "Relative tolerance");
  add_common(dobinski, dob_opts, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*table) {
      emit(cmd_table(family, n_max, table_opts, route), table_opts, out);
    } else if (*poly) {
      emit(cmd_poly(kind, poly_n, poly_k, poly_opts), poly_opts, out);
    } else if (*verify) {
      const OutputRecord record = cmd_verify(tags, config_path, failures_only);
      emit(record, verify_opts, out);
      const bool all_pass =
          std::all_of(record.reports.begin(), record.reports.end(), [](const auto& r) { return r.pass; });
      return all_pass ? kSuccess : kVerificationFailed;
    } else if (*dobinski) {
      emit(cmd_dobinski(dob_n, dob_x, tol, dob_opts), dob_opts, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kSuccess;
}

}  // namespace hetbell::cli
