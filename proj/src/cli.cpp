#include "steklov/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <CLI11.hpp>

#include "steklov/bounds.hpp"
#include "steklov/flows.hpp"
#include "steklov/generators.hpp"
#include "steklov/graph_io.hpp"
#include "steklov/spectral.hpp"

namespace steklov {

namespace {

std::string join(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + format_number(xs[i], 12);
  return out;
}

Report start_report(const RunConfig& c) {
  Report r;
  r.command = c.command;
  if (!c.input_path.empty()) r.config.emplace_back("in", c.input_path);
  if (!c.generate.empty()) r.config.emplace_back("generate", c.generate);
  if (!c.family.empty()) r.config.emplace_back("family", c.family);
  if (!c.range.empty()) r.config.emplace_back("range", c.range);
  r.config.emplace_back("boundary", c.boundary);
  r.config.emplace_back("seed", std::to_string(c.seed));
  r.config.emplace_back("max_iters", std::to_string(c.max_iters));
  r.config.emplace_back("tol", format_number(c.tol, 12));
  r.config.emplace_back("penalties", join(c.penalties));
  return r;
}

BoundedGraph load_graph(const RunConfig& c) {
  if (!c.input_path.empty() && !c.generate.empty())
    throw Error(ErrorCode::ParseError, "use either --in or --generate, not both");
  if (!c.input_path.empty()) {
    RawGraph raw = read_graph_file(c.input_path);
    if (c.boundary != "default") {
      // Explicit boundary overrides the file's list; family keywords need a generator.
      raw.boundary = resolve_boundary({Family::Path, {raw.num_vertices}}, raw, c.boundary);
    }
    return validate(raw);
  }
  if (!c.generate.empty()) return generate(parse_family(c.generate), c.boundary);
  throw Error(ErrorCode::ParseError, "one of --in or --generate is required");
}

void add_graph_section(Report& report, const BoundedGraph& g) {
  const auto deg = degrees(g);
  Cell diameter;
  try {
    diameter = static_cast<long long>(boundary_diameter(g));
  } catch (const Error&) {
  }
  auto& s = report.add_section("graph", {"n", "edges", "boundary_size", "max_degree", "min_boundary_degree",
                                         "boundary_diameter", "boundary_independent"});
  s.add_row({static_cast<long long>(g.num_vertices()), static_cast<long long>(g.num_edges()),
             static_cast<long long>(g.boundary_size()), static_cast<long long>(deg.max_degree),
             static_cast<long long>(deg.min_boundary_degree), diameter, is_boundary_independent(g)});
}

Cell opt(const std::optional<double>& v) { return v ? Cell(*v) : Cell(); }

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Error(ErrorCode::ParseError, "range must look like A..B");
  auto parse = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
      throw Error(ErrorCode::ParseError, "bad range '" + text + "'");
    return v;
  };
  const int a = parse(std::string_view(text).substr(0, dots));
  const int b = parse(std::string_view(text).substr(dots + 2));
  if (a > b) throw Error(ErrorCode::ParseError, "empty range '" + text + "'");
  return {a, b};
}

FamilySpec sweep_member(Family family, int p) {
  switch (family) {
    case Family::Grid:
    case Family::Torus: return {family, {p, p}};
    case Family::CompleteBipartite: return {family, {2, p}};
    default: return {family, {p}};
  }
}

}  // namespace

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto g = load_graph(config);
  const auto spectrum = steklov_spectrum(g);
  Report report = start_report(config);
  add_graph_section(report, g);
  auto& s = report.add_section("spectrum", {"k", "sigma"});
  for (int k = 1; k <= spectrum.size(); ++k) s.add_row({static_cast<long long>(k), spectrum.sigma(k)});

  if (config.penalized) {
    auto& p = report.add_section("penalized", {"r", "k", "mu", "sigma", "abs_error"});
    auto& d = report.add_section("penalized_divergence", {"r", "k", "mu"});
    for (double r : config.penalties) {
      const auto pen = penalized_spectrum(g, r);
      for (int k = 1; k <= spectrum.size(); ++k)
        p.add_row({r, static_cast<long long>(k), pen.mu(k), spectrum.sigma(k), std::abs(pen.mu(k) - spectrum.sigma(k))});
      if (g.boundary_size() < g.num_vertices())
        d.add_row({r, static_cast<long long>(g.boundary_size() + 1), pen.mu(g.boundary_size() + 1)});
    }
  }
  write_report(report, config.format, out);
  return kExitOk;
}

int cmd_bounds(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto g = load_graph(config);
  const auto table = evaluate_all(g);
  Report report = start_report(config);
  add_graph_section(report, g);

  auto& s = report.add_section("bounds", {"bound", "k", "value", "sigma_k", "slack", "satisfied", "tight", "note"});
  for (const auto& r : table.reports) {
    std::string note;
    for (const auto& a : r.assumptions) note += (note.empty() ? "" : "; ") + a;
    if (!r.applicable()) note = "not applicable: " + r.reason;
    s.add_row({r.bound_name, static_cast<long long>(r.k), opt(r.value), r.sigma_k,
               r.applicable() ? Cell(r.slack()) : Cell(), r.satisfied(), r.tight(), note});
  }

  auto& l = report.add_section("laplacian_comparison", {"lambda2", "fiedler_bound", "min_degree", "sigma2"});
  l.add_row({table.laplacian_lambda2, table.fiedler_bound, static_cast<long long>(table.min_degree),
             table.spectrum.sigma(2)});

  auto& p = report.add_section("refuted_probes", {"probe", "statement", "threshold", "sigma2", "status"});
  for (const auto& probe : table.probes)
    p.add_row({probe.name, probe.statement, probe.threshold, table.spectrum.sigma(2),
               std::string(probe.violated ? "VIOLATED-IF-ASSUMED" : "holds")});
  write_report(report, config.format, out);
  return kExitOk;
}

int cmd_duality(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto g = load_graph(config);
  if (g.num_vertices() > 12 || g.boundary_size() > 5)
    err << "warning: duality runs are calibrated for n <= 12 and |B| <= 5\n";
  const auto r = duality_gap(g, {config.max_iters, config.tol}, config.seed);
  Report report = start_report(config);
  add_graph_section(report, g);
  auto& s = report.add_section("duality", {"con2_star", "lambda_star", "gap", "iterations", "fw_gap", "converged",
                                           "weak_duality"});
  s.add_row({r.con2_star, r.lambda_star, r.gap, static_cast<long long>(r.iterations), r.fw_gap, r.converged,
             r.weak_duality_ok});
  if (!r.converged) report.notes.push_back("Frank-Wolfe gap above tolerance at max_iters; partial results");
  write_report(report, config.format, out);
  if (!r.converged) return kExitNotConverged;
  return r.weak_duality_ok ? kExitOk : kExitInputError;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.family.empty()) throw Error(ErrorCode::ParseError, "sweep needs --family");
  const Family family = family_from_name(config.family);
  const auto [lo, hi] = parse_range(config.range.empty() ? std::string("3..6") : config.range);

  Report report = start_report(config);
  auto& s = report.add_section(
      "sweep", {"param", "graph", "n", "edges", "boundary_size", "max_degree", "min_boundary_degree", "sigma2",
                "min_degree_bound", "planar_bound", "planar_slack", "interlacing_bound_2", "degree_sequence_bound_2",
                "sigma2_over_sqrt_edges", "genus", "genus_ratio"});
  bool failed = false;
  for (int p = lo; p <= hi; ++p) {
    const auto spec = sweep_member(family, p);
    const auto g = generate(spec, config.boundary);
    const auto spectrum = steklov_spectrum(g);
    const auto deg = degrees(g);
    const double sigma2 = spectrum.sigma(2);
    const auto planar = bound_planar(g, spectrum);
    const auto interlacing = bound_interlacing(g, spectrum);
    Cell genus, ratio;
    if (g.metadata().genus) {
      const auto row = genus_scaling_row(to_string(spec), g);
      genus = static_cast<long long>(row.genus);
      ratio = row.ratio;
    }
    s.add_row({static_cast<long long>(p), to_string(spec), static_cast<long long>(g.num_vertices()),
               static_cast<long long>(g.num_edges()), static_cast<long long>(g.boundary_size()),
               static_cast<long long>(deg.max_degree), static_cast<long long>(deg.min_boundary_degree), sigma2,
               opt(bound_min_degree(g, spectrum).value), opt(planar.value),
               planar.applicable() ? Cell(planar.slack()) : Cell(), opt(interlacing[1].value),
               opt(bound_degree_sequence(g, spectrum, 2).report.value),
               sigma2 / std::sqrt(static_cast<double>(g.num_edges())), genus, ratio});
    if (family == Family::K2DVee && std::abs(sigma2 - (p - 0.8)) > 1e-8) {
      err << "check failed: sigma_2(" << to_string(spec) << ") = " << format_number(sigma2, 12)
          << " != Delta - 4/5\n";
      failed = true;
    }
  }
  if (family == Family::K2DVee) report.notes.push_back("sigma2 checked against Delta - 4/5 within 1e-8");
  write_report(report, config.format, out);
  return failed ? kExitInputError : kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steklov spectra, eigenvalue bounds and flow duality for graphs with boundary", "steklov"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "table";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--in", config.input_path, "graph JSON file");
    sub->add_option("--generate", config.generate, "FAMILY:ARGS, e.g. path:3, grid:3,3, k2dvee:5");
    sub->add_option("--boundary", config.boundary, "default | ends | all | leaves | border | v1,v2,...");
    sub->add_option("--format", format, "table | csv | json");
    sub->add_option("--seed", config.seed, "random seed");
    sub->add_option("--max-iters", config.max_iters, "Frank-Wolfe iteration cap");
    sub->add_option("--tol", config.tol, "Frank-Wolfe gap tolerance");
  };
  auto* spectrum = app.add_subcommand("spectrum", "Steklov spectrum of a graph");
  add_common(spectrum);
  spectrum->add_flag("--penalized", config.penalized, "add the penalized-Laplacian convergence table");
  auto* bounds = app.add_subcommand("bounds", "evaluate every Steklov upper bound");
  add_common(bounds);
  auto* duality = app.add_subcommand("duality", "min 2-congestion vs max Lambda_s");
  add_common(duality);
  auto* sweep = app.add_subcommand("sweep", "sigma_2 and bounds over a family");
  add_common(sweep);
  sweep->add_option("--family", config.family, "family name, e.g. k2dvee, grid, star");
  sweep->add_option("--range", config.range, "parameter range A..B");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    config.format = parse_output_format(format);
    config.command = app.get_subcommands().front()->get_name();
    if (config.command == "spectrum") return cmd_spectrum(config, out, err);
    if (config.command == "bounds") return cmd_bounds(config, out, err);
    if (config.command == "duality") return cmd_duality(config, out, err);
    return cmd_sweep(config, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace steklov
