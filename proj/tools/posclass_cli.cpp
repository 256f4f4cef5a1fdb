// posclass: Schur expansions of positroid classes from the command line.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "posclass/bridge.hpp"
#include "posclass/error.hpp"
#include "posclass/json_io.hpp"
#include "posclass/lstree.hpp"
#include "posclass/oracle.hpp"
#include "posclass/verify.hpp"

namespace {

using namespace posclass;
using nlohmann::json;

enum ExitCode { kOk = 0, kInternal = 1, kInvalid = 2, kBudget = 3 };

struct Options {
  int n = 0;
  int k = 0;
  std::string window;
  std::string u, v, interval;
  std::string lower, upper, shape;
  Int offset = 0;
  std::string diagram;
  std::string format = "text";
  bool trace = false;
  int budget = -1;
  int threads = 1;
  int max_n = 5;
  int dim_v = 3;
  int samples = 30;
};

std::string read_text_or_file(const std::string& value) {
  std::error_code ec;
  if (!value.empty() && std::filesystem::is_regular_file(value, ec)) {
    std::ifstream in(value);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  return value;
}

AffinePermutation window_input(const Options& o) {
  const AffinePermutation f = parse_window(read_text_or_file(o.window));
  if (f.n() != o.n)
    throw Error(ErrorCode::InvalidArgument, "window has " + std::to_string(f.n()) +
                                                " entries but --n is " + std::to_string(o.n));
  return f;
}

void print_expansion(const LsExpansion& e, const Options& o, json extra = json::object()) {
  if (o.format == "json") {
    json doc = expansion_to_json(e);
    doc.update(extra);
    std::cout << doc.dump() << "\n";
    return;
  }
  std::cout << format_schur_text(e.result) << "\n";
}

int run_expand(const Options& o) {
  const AffinePermutation f = window_input(o);
  if (o.trace && o.format == "text") std::cout << trace(f, o.k, o.n);
  print_expansion(expand(f, o.k, o.n, ExpandOptions{o.threads}), o);
  return kOk;
}

int run_trace(const Options& o) {
  const AffinePermutation f = window_input(o);
  const std::string text = trace(f, o.k, o.n);
  if (o.format == "json") {
    json lines = json::array();
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    std::cout << json{{"window", normalize_to_class(f, o.k).window_vector()},
                      {"n", o.n},
                      {"k", o.k},
                      {"lines", lines}}
                     .dump()
              << "\n";
  } else {
    std::cout << text;
  }
  return kOk;
}

int run_interval(const Options& o) {
  const KBruhatInterval interval =
      o.interval.empty()
          ? KBruhatInterval(parse_permutation(o.u), parse_permutation(o.v), o.k)
          : KBruhatInterval::parse(read_text_or_file(o.interval));
  const AffinePermutation f = f_from_interval(interval);
  const LsExpansion e = expand(f, interval.k(), interval.n(), ExpandOptions{o.threads});
  std::map<Partition, BigInt> coefficients;
  for (const auto& [mu, c] : e.result.terms())
    coefficients.emplace(complement(mu, interval.k(), interval.n() - interval.k()), c);
  if (o.format == "json") {
    json doc = expansion_to_json(e);
    doc["u"] = interval.u();
    doc["v"] = interval.v();
    doc["coefficients"] = terms_to_json(coefficients);
    std::cout << doc.dump() << "\n";
    return kOk;
  }
  std::cout << "f = " << format_window(f) << "\n";
  std::cout << "G = " << format_schur_text(e.result) << "\n";
  for (const auto& [lambda, c] : coefficients)
    std::cout << "c(u, w" << format_partition(lambda) << "; v) = " << c << "\n";
  return kOk;
}

CylindricSkewShape shape_input(const Options& o) {
  const CylindricSkewShape shape =
      o.shape.empty() ? CylindricSkewShape::from_words(o.lower, o.upper, o.offset)
                      : CylindricSkewShape::parse(read_text_or_file(o.shape));
  if ((o.n && shape.n() != o.n) || (o.k && shape.k() != o.k))
    throw Error(ErrorCode::InvalidArgument,
                "shape lives on C_{" + std::to_string(shape.k()) + "," +
                    std::to_string(shape.m()) + "}, not the --k/--n given");
  return shape;
}

int run_toric(const Options& o) {
  const CylindricSkewShape shape = shape_input(o);
  if (!shape.is_toric())
    throw Error(ErrorCode::NotToric, format_shape(shape) + " is not toric");
  const AffinePermutation f = f_from_cylindric_shape(shape);
  if (o.trace && o.format == "text") std::cout << trace(f, shape.k(), shape.n());
  const LsExpansion e = expand(f, shape.k(), shape.n(), ExpandOptions{o.threads});
  if (o.format == "text") std::cout << "f = " << format_window(f) << "\n";
  print_expansion(e, o, {{"shape", format_shape(shape)}});
  return kOk;
}

void print_terms(const std::map<Partition, BigInt>& terms, const Options& o, json header) {
  if (o.format == "json") {
    header["terms"] = terms_to_json(terms);
    std::cout << header.dump() << "\n";
  } else {
    std::cout << format_schur_text(terms) << "\n";
  }
}

int run_three_row(const Options& o) {
  const Diagram d = parse_diagram(read_text_or_file(o.diagram));
  print_terms(three_row_decompose(d, o.dim_v), o, {{"dim_v", o.dim_v}});
  return kOk;
}

int run_schur_module(const Options& o) {
  const Diagram d = parse_diagram(read_text_or_file(o.diagram));
  OracleBudget budget;
  if (o.budget >= 0) budget.max_module_cells = o.budget;
  print_terms(schur_module_character(d, o.k, budget), o, {{"k", o.k}});
  return kOk;
}

int run_verify_command(const Options& o) {
  VerifyOptions options;
  options.max_n = o.max_n;
  options.three_row_samples = o.samples;
  std::ostringstream log;
  const VerifyReport report = run_verify(options, log);
  if (o.format == "json") {
    std::cout << json{{"permutations", report.permutations}, {"failures", report.failures}}.dump()
              << "\n";
  } else {
    std::cout << log.str();
    for (const auto& failure : report.failures) std::cout << "FAIL: " << failure << "\n";
    if (report.ok())
      std::cout << "OK: " << report.permutations << " permutations cross-checked\n";
  }
  return report.ok() ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur expansions of positroid classes via the bounded affine L-S tree"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_window = [&](CLI::App* cmd) {
    cmd->add_option("--n", o.n, "Quasi-period")->required()->check(CLI::Range(1, 64));
    cmd->add_option("--k", o.k, "Rank")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--window", o.window, "Comma-separated window, or a file")->required();
  };

  auto* expand_cmd = app.add_subcommand("expand", "Schur expansion of G_f");
  add_window(expand_cmd);
  add_format(expand_cmd);
  expand_cmd->add_flag("--trace", o.trace, "Print the tree first (text format)");
  expand_cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1, 256));

  auto* trace_cmd = app.add_subcommand("trace", "Print the bounded affine L-S tree");
  add_window(trace_cmd);
  add_format(trace_cmd);

  auto* interval_cmd = app.add_subcommand("interval", "Schubert times Schur coefficients");
  auto* u_opt = interval_cmd->add_option("--u", o.u, "Lower permutation");
  auto* v_opt = interval_cmd->add_option("--v", o.v, "Upper permutation");
  auto* k_opt = interval_cmd->add_option("--k", o.k, "k of the k-Bruhat order");
  auto* iv_opt = interval_cmd->add_option("--interval", o.interval,
                                          "\"u=.. v=.. k=..\" inline or in a file");
  iv_opt->excludes(u_opt)->excludes(v_opt)->excludes(k_opt);
  u_opt->needs(v_opt)->needs(k_opt);
  add_format(interval_cmd);
  interval_cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1, 256));

  auto* toric_cmd = app.add_subcommand("toric", "Toric Schur polynomial through f_Theta");
  toric_cmd->add_option("--n", o.n, "Cylinder C_{k,n-k}: n");
  toric_cmd->add_option("--k", o.k, "Cylinder C_{k,n-k}: k");
  auto* lower_opt = toric_cmd->add_option("--lower", o.lower, "Lower path word in V/H");
  auto* upper_opt = toric_cmd->add_option("--upper", o.upper, "Upper path word in V/H");
  auto* offset_opt = toric_cmd->add_option("--offset", o.offset, "Upper path start column");
  auto* shape_opt = toric_cmd->add_option("--shape", o.shape,
                                          "\"lower=.. upper=.. offset=..\" inline or in a file");
  shape_opt->excludes(lower_opt)->excludes(upper_opt)->excludes(offset_opt);
  lower_opt->needs(upper_opt);
  upper_opt->needs(lower_opt);
  toric_cmd->add_flag("--trace", o.trace, "Print the tree first (text format)");
  toric_cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1, 256));
  add_format(toric_cmd);

  auto* three_row_cmd = app.add_subcommand("three-row", "Decompose V[D] for a three-row D");
  three_row_cmd->add_option("--diagram", o.diagram, "Diagram inline (\"1: 2,3; 2: 1,2\") or file")
      ->required();
  three_row_cmd->add_option("--dim-v", o.dim_v, "dim V")->check(CLI::Range(3, 1000));
  add_format(three_row_cmd);

  auto* module_cmd = app.add_subcommand("schur-module", "ch V[D] by symmetrizer ranks");
  module_cmd->add_option("--diagram", o.diagram, "Diagram inline or file")->required();
  module_cmd->add_option("--k", o.k, "dim V")->required()->check(CLI::Range(0, 3));
  module_cmd->add_option("--budget", o.budget, "Maximum number of cells")
      ->check(CLI::NonNegativeNumber);
  add_format(module_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check against brute-force oracles");
  verify_cmd->add_option("--max-n", o.max_n, "Largest period swept")->check(CLI::Range(1, 6));
  verify_cmd->add_option("--samples", o.samples, "Random three-row diagrams")
      ->check(CLI::NonNegativeNumber);
  add_format(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalid;
  }

  try {
    if (*expand_cmd) return run_expand(o);
    if (*trace_cmd) return run_trace(o);
    if (*interval_cmd) {
      if (o.interval.empty() && o.u.empty()) {
        std::cerr << "interval: give --u/--v/--k or --interval\n";
        return kInvalid;
      }
      return run_interval(o);
    }
    if (*toric_cmd) {
      if (o.shape.empty() && o.lower.empty()) {
        std::cerr << "toric: give --lower/--upper or --shape\n";
        return kInvalid;
      }
      return run_toric(o);
    }
    if (*three_row_cmd) return run_three_row(o);
    if (*module_cmd) return run_schur_module(o);
    if (*verify_cmd) return run_verify_command(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << " [" << e.location() << "]\n";
    if (e.code() == ErrorCode::BudgetExceeded) return kBudget;
    if (e.code() == ErrorCode::InvariantViolation) return kInternal;
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kInvalid;
}
