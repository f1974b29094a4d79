#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ldpcball/bounds.hpp"
#include "ldpcball/code_io.hpp"
#include "ldpcball/coset_table.hpp"
#include "ldpcball/curves.hpp"
#include "ldpcball/errors.hpp"
#include "ldpcball/harness.hpp"
#include "ldpcball/partition.hpp"

namespace ldpcball::cli {

namespace {

struct BoundsOptions {
  std::size_t w = 3;
  std::vector<std::string> curves;
  std::optional<double> delta_min;
  double delta_max = 0.5;
  double step = 0.001;
  std::string format = "csv";
  bool strict = false;
  std::string output;
};

struct GraphOptions {
  std::string code;
  std::optional<double> rho;
  std::optional<double> delta;
};

struct VerifyOptions {
  std::string suite;
  std::optional<std::size_t> codes;
  std::optional<std::size_t> n_min;
  std::optional<std::size_t> n_max;
  std::vector<std::size_t> ws;
  std::vector<double> rhos;
  std::uint64_t seed = 0;
  std::string mode = "uniform-support";
  bool column_weight_2 = false;
  std::string output;
};

struct CrossoverOptions {
  std::string a;
  std::string b;
  std::size_t w = 3;
  double lo = 0.0;
  double hi = 0.5;
  bool strict = false;
};

struct GenOptions {
  std::size_t n = 0;
  std::size_t w = 3;
  std::size_t rows = 0;
  std::uint64_t seed = 0;
  std::string mode = "uniform-support";
  bool column_weight_2 = false;
  std::string output;
};

struct McOptions {
  std::string code;
  double rho = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool min_weight = false;
};

LinearCode load_code(const std::string& path) {
  if (path.ends_with(".alist")) return read_alist_file(path);
  return read_code_file(path);
}

// Writes to the named file, or to `out` when the name is empty.
void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open output file: " + path);
  f << text;
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

int cmd_bounds(const BoundsOptions& o, std::ostream& out) {
  auto names = o.curves.empty() ? default_curves(o.w) : o.curves;
  for (const auto& name : names) {
    if (!is_known_curve(name)) throw DomainError("unknown curve: " + name);
  }
  if (o.format != "csv" && o.format != "json") throw DomainError("format must be csv or json");
  const auto grid = delta_grid(o.delta_min.value_or(o.step), o.delta_max, o.step);
  const auto mode = o.strict ? InnerBound::strict : InnerBound::lax;
  const OptimizationSettings settings;
  const auto curves = sample_curves(names, o.w, grid, mode, settings);
  std::ostringstream text;
  if (o.format == "csv") {
    write_csv(text, curves);
  } else {
    text << curves_to_json(curves, o.w, mode, settings).dump(2) << '\n';
  }
  emit(o.output, out, text.str());
  return exit_ok;
}

int cmd_graph(const GraphOptions& o, std::ostream& out) {
  const auto code = load_code(o.code);
  const auto table = build_table(code);
  const auto profile = sphere_profile(table);
  out << "n=" << code.n() << " w=" << code.w() << " m=" << code.m() << '\n';
  out << "dual_dim=" << code.dual_dim() << " code_dim=" << code.code_dim() << " cosets=" << table.coset_count()
      << '\n';
  auto join = [](const std::vector<std::uint64_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
  };
  std::vector<std::uint64_t> balls;
  for (std::size_t r = 0; r < profile.sizes.size(); ++r) balls.push_back(ball_size(table, r));
  out << "sphere_profile=" << join(profile.sizes) << '\n';
  out << "ball_sizes=" << join(balls) << '\n';
  out << "diameter=" << diameter(table) << '\n';
  if (o.rho) out << "p(" << format_g9(*o.rho) << ")=" << format_g9(exact_leader_probability(table, *o.rho)) << '\n';
  if (o.delta) {
    const double rho = jpl_rho(*o.delta);
    const auto r = static_cast<std::size_t>(std::floor(rho * static_cast<double>(code.n())));
    out << "size_vs_ball r=" << r << " log2_code_size=" << code.code_dim() << " ball=" << ball_size(table, r) << '\n';
  }
  return exit_ok;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  if (!is_known_suite(o.suite)) throw DomainError("unknown suite: " + o.suite);
  auto batch = default_batch(o.suite);
  batch.seed = o.seed;
  if (o.codes) batch.codes = *o.codes;
  if (o.n_min) batch.n_min = *o.n_min;
  if (o.n_max) batch.n_max = *o.n_max;
  if (!o.ws.empty()) batch.ws = o.ws;
  if (!o.rhos.empty()) batch.rhos = o.rhos;
  const auto mode = parse_generator_mode(o.mode);
  if (!mode) throw DomainError("unknown generator mode: " + o.mode);
  batch.mode = *mode;
  batch.require_column_weight_2 = o.column_weight_2;

  const auto report = run_suite(o.suite, batch);
  emit(o.output, out, to_json(report).dump(2) + "\n");
  if (!report.passed()) return exit_failure;
  if (!report.resource_failures.empty()) return exit_resource;
  return exit_ok;
}

int cmd_crossover(const CrossoverOptions& o, std::ostream& out, std::ostream& err) {
  for (const auto& name : {o.a, o.b}) {
    if (!is_known_curve(name)) throw DomainError("unknown curve: " + name);
  }
  const auto mode = o.strict ? InnerBound::strict : InnerBound::lax;
  const OptimizationSettings settings;
  auto curve = [&](const std::string& name) {
    return [&, name](double d) { return curve_value(name, o.w, d, mode, settings); };
  };
  try {
    const double x = crossover(curve(o.a), curve(o.b), o.lo, o.hi, settings);
    out << "delta*=" << fixed(x, 5) << ' ' << o.a << '=' << format_g9(curve(o.a)(x)) << ' ' << o.b << '='
        << format_g9(curve(o.b)(x)) << '\n';
    return exit_ok;
  } catch (const CrossoverError& e) {
    err << "crossover: " << e.what() << '\n';
    return exit_failure;
  }
}

int cmd_gen(const GenOptions& o, std::ostream& out) {
  GeneratorConfig c;
  c.n = o.n;
  c.w = o.w;
  c.m = o.rows;
  c.seed = o.seed;
  const auto mode = parse_generator_mode(o.mode);
  if (!mode) throw DomainError("unknown generator mode: " + o.mode);
  c.mode = *mode;
  c.require_column_weight_2 = o.column_weight_2;
  emit(o.output, out, format_code(generate_code(c)));
  return exit_ok;
}

int cmd_mc(const McOptions& o, std::ostream& out) {
  if (o.samples == 0) throw DomainError("samples must be positive");
  const auto code = load_code(o.code);
  const auto est = montecarlo_leader_probability(code, o.rho, o.samples, o.seed,
                                                 o.min_weight ? LeaderMode::min_weight : LeaderMode::strict);
  out << "estimate=" << format_g9(est.estimate) << " ci_low=" << format_g9(est.ci_low)
      << " ci_high=" << format_g9(est.ci_high) << " hits=" << est.hits << " samples=" << est.samples << '\n';
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coset leader graphs and rate bounds for LDPC duals", "ldpcball"};
  app.require_subcommand(1);

  BoundsOptions bo;
  auto* bounds = app.add_subcommand("bounds", "Tabulate rate-vs-distance bounds");
  bounds->add_option("--w", bo.w, "Row weight")->check(CLI::Range(3, 64));
  bounds->add_option("--curves", bo.curves, "Comma-separated curve names")->delimiter(',');
  bounds->add_option("--delta-min", bo.delta_min, "First delta (default: step)");
  bounds->add_option("--delta-max", bo.delta_max, "Last delta");
  bounds->add_option("--step", bo.step, "Delta step");
  bounds->add_option("--format", bo.format, "csv or json");
  bounds->add_flag("--strict", bo.strict, "Substitute the inner bound only where the JPL bounds coincide");
  bounds->add_option("--output,-o", bo.output, "Output file");

  GraphOptions go;
  auto* graph = app.add_subcommand("graph", "Analyse the coset leader graph of a code file");
  graph->add_option("code,--code", go.code, "coset-code v1 or .alist file")->required();
  graph->add_option("--rho", go.rho, "Report the exact leader probability at rho");
  graph->add_option("--delta", go.delta, "Report |C| against the ball at the JPL radius");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run a verification suite over generated codes");
  verify->add_option("--suite", vo.suite, "Suite name")->required();
  verify->add_option("--codes", vo.codes, "Number of codes");
  verify->add_option("--n-min", vo.n_min, "Smallest block length");
  verify->add_option("--n-max", vo.n_max, "Largest block length");
  verify->add_option("--w", vo.ws, "Row weight(s)")->delimiter(',');
  verify->add_option("--rho", vo.rhos, "rho value(s)")->delimiter(',');
  verify->add_option("--seed", vo.seed, "Random seed")->required();
  verify->add_option("--mode", vo.mode, "uniform-support or regular-tanner");
  verify->add_flag("--column-weight-2", vo.column_weight_2, "Require every column weight >= 2");
  verify->add_option("--output,-o", vo.output, "Report file");

  CrossoverOptions xo;
  auto* cross = app.add_subcommand("crossover", "Locate where two curves cross");
  cross->add_option("--a", xo.a, "First curve")->required();
  cross->add_option("--b", xo.b, "Second curve")->required();
  cross->add_option("--w", xo.w, "Row weight")->check(CLI::Range(3, 64));
  cross->add_option("--lo", xo.lo, "Interval start");
  cross->add_option("--hi", xo.hi, "Interval end");
  cross->add_flag("--strict", xo.strict, "Strict inner-bound substitution");

  GenOptions ge;
  auto* gen = app.add_subcommand("gen", "Generate a random code file");
  gen->add_option("--n", ge.n, "Block length")->required();
  gen->add_option("--w", ge.w, "Row weight");
  gen->add_option("--rows", ge.rows, "Number of dual rows")->required();
  gen->add_option("--seed", ge.seed, "Random seed")->required();
  gen->add_option("--mode", ge.mode, "uniform-support or regular-tanner");
  gen->add_flag("--column-weight-2", ge.column_weight_2, "Require every column weight >= 2");
  gen->add_option("--output,-o", ge.output, "Output file");

  McOptions mo;
  auto* mc = app.add_subcommand("mc", "Monte-Carlo estimate of the coset leader probability");
  mc->add_option("code,--code", mo.code, "Code file")->required();
  mc->add_option("--rho", mo.rho, "Bernoulli parameter")->required();
  mc->add_option("--samples", mo.samples, "Number of samples")->required();
  mc->add_option("--seed", mo.seed, "Random seed")->required();
  mc->add_flag("--min-weight", mo.min_weight, "Count every minimum-weight coset member, not only the lexicographic leader");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return exit_ok;
    }
    err << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (*bounds) return cmd_bounds(bo, out);
    if (*graph) return cmd_graph(go, out);
    if (*verify) return cmd_verify(vo, out);
    if (*cross) return cmd_crossover(xo, out, err);
    if (*gen) return cmd_gen(ge, out);
    if (*mc) return cmd_mc(mo, out);
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << '\n';
    return exit_resource;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_usage;
  } catch (const DomainError& e) {
    err << "usage: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_usage;
}

}  // namespace ldpcball::cli
