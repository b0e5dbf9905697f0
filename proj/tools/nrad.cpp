// nrad: verify numerical-radius bounds from the command line.
//
// Exit status: 0 when every checked inequality holds, 1 on violations,
// 2 on usage or I/O errors.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nrad/bound_catalog.hpp"
#include "nrad/errors.hpp"
#include "nrad/json_io.hpp"
#include "nrad/lambda_optimizer.hpp"
#include "nrad/matrix_core.hpp"
#include "nrad/refinement_chain.hpp"
#include "nrad/report.hpp"
#include "nrad/suite.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split_list(text)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw nrad::Error(nrad::ErrorCode::InvalidArgument, "bad lambda '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::string json_string(std::string_view s) {
  std::string out = "\"";
  out += s;
  return out + "\"";
}

std::string result_json(const nrad::BoundResult& r, double lambda, bool with_lambda) {
  using nrad::format_double;
  std::string out = "{\"bound\": " + json_string(r.bound_name) + ", \"mode\": " + json_string(nrad::to_string(r.mode));
  out += ", \"lambda\": " + (with_lambda ? format_double(lambda) : std::string("null"));
  out += ", \"exponent_p\": " + format_double(r.exponent_p);
  out += ", \"w_power\": " + format_double(r.w_power_value);
  out += ", \"rhs\": " + format_double(r.rhs_value);
  out += ", \"slack\": " + format_double(r.slack);
  out += std::string(", \"holds\": ") + (r.holds ? "true" : "false") + "}";
  return out;
}

struct MatrixArgs {
  std::string matrix;
  std::string second;
  std::string bound;
  std::string mode;
  double r = 1.0;
  int n = 1;
  double alpha = 0.5;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--matrix", matrix, "Matrix file (JSON)")->required();
    cmd->add_option("--second", second, "Second matrix S for product bounds (defaults to T)");
    cmd->add_option("--bound", bound, "Bound identifier")->required();
    cmd->add_option("--mode", mode, "inequality or certificate (default: every supported mode)");
    cmd->add_option("--r", r, "Power r >= 1");
    cmd->add_option("--n", n, "Power index n >= 1");
    cmd->add_option("--alpha", alpha, "Exponent split alpha in [0, 1]");
  }

  nrad::BoundInputs inputs(double lambda) const {
    nrad::BoundParams params;
    params.lambda = lambda > 0.0 ? lambda : 1.0;
    params.r = r;
    params.n = n;
    params.alpha = alpha;
    params.validate();
    const auto t = nrad::read_matrix_file(matrix);
    std::optional<nrad::ComplexMatrix> s;
    if (!second.empty()) s = nrad::read_matrix_file(second);
    return nrad::prepare_bound_inputs(t, s ? &*s : &t, params);
  }

  std::vector<nrad::BoundMode> modes(nrad::BoundId id) const {
    if (mode.empty()) return nrad::supported_modes(id);
    return {nrad::mode_from_name(mode)};
  }
};

int run_verify(const nrad::EnsembleConfig& config, const nrad::SuiteOptions& options, const std::string& out,
               const std::string& format) {
  const auto fmt = nrad::report_format_from_name(format);
  const auto report = nrad::run_suite(config, options);
  nrad::emit_report(report, fmt, out);
  std::printf("%zu bound rows, %zu chain rows, %d violations\n", report.bound_rows.size(),
              report.chain_rows.size(), report.violations);
  return report.violations == 0 ? kExitOk : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical radius bound verifier"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Run bounds and chains over a random ensemble");
  std::string ensemble = "ginibre";
  nrad::EnsembleConfig config;
  std::string bounds_arg = "all";
  std::string chains_arg = "all";
  std::string grid_arg;
  nrad::SuiteOptions suite;
  std::string out_path;
  std::string format = "json";
  verify->add_option("--ensemble", ensemble, "ginibre, gue, nilpotent, normal, rank_one or jordan")->required();
  verify->add_option("--dim", config.dim, "Matrix dimension")->required();
  verify->add_option("--trials", config.trials, "Number of matrices")->required();
  verify->add_option("--seed", config.seed, "Base seed")->required();
  verify->add_option("--bounds", bounds_arg, "Comma-separated bounds, 'all' or 'none'");
  verify->add_option("--chains", chains_arg, "Comma-separated chains, 'all' or 'none'");
  verify->add_option("--lambda-grid", grid_arg, "Comma-separated lambda values");
  verify->add_option("--r", suite.r, "Power r >= 1");
  verify->add_option("--n", suite.n, "Power index n >= 1");
  verify->add_option("--alpha", suite.alpha, "Exponent split alpha in [0, 1]");
  verify->add_option("--threads", suite.threads, "Worker threads");
  verify->add_option("--out", out_path, "Report path")->required();
  verify->add_option("--format", format, "json or csv");

  // bound
  auto* bound = app.add_subcommand("bound", "Evaluate one bound on a matrix");
  MatrixArgs bound_args;
  double lambda = 1.0;
  bound_args.add_to(bound);
  bound->add_option("--lambda", lambda, "Value of lambda");

  // optimize
  auto* optimize = app.add_subcommand("optimize", "Minimize a bound over lambda");
  MatrixArgs opt_args;
  std::string method = "auto";
  opt_args.add_to(optimize);
  optimize->add_option("--method", method, "auto, closed-form or golden-section");

  // radius
  auto* radius = app.add_subcommand("radius", "Numerical radius of a matrix");
  std::string radius_matrix;
  double tol = nrad::kRadiusTolerance;
  int samples = 0;
  std::uint64_t seed = 0;
  radius->add_option("--matrix", radius_matrix, "Matrix file (JSON)")->required();
  radius->add_option("--tol", tol, "Angle tolerance");
  auto* samples_opt = radius->add_option("--oracle-samples", samples, "Random starts for the sampling estimate");
  radius->add_option("--seed", seed, "Seed for the sampling estimate")->needs(samples_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) {
      config.ensemble = nrad::ensemble_from_name(ensemble);
      suite.bounds.clear();
      suite.chains.clear();
      if (bounds_arg == "all") {
        suite.bounds.assign(nrad::all_bounds().begin(), nrad::all_bounds().end());
      } else if (bounds_arg != "none") {
        for (const auto& name : split_list(bounds_arg)) suite.bounds.push_back(nrad::bound_from_name(name));
      }
      if (chains_arg == "all") {
        suite.chains.assign(nrad::all_chains().begin(), nrad::all_chains().end());
      } else if (chains_arg != "none") {
        for (const auto& name : split_list(chains_arg)) suite.chains.push_back(nrad::chain_from_name(name));
      }
      if (!grid_arg.empty()) suite.lambda_grid = parse_grid(grid_arg);
      return run_verify(config, suite, out_path, format);
    }

    if (*bound) {
      const auto id = nrad::bound_from_name(bound_args.bound);
      const auto inputs = bound_args.inputs(lambda);
      bool all_hold = true;
      std::string out = "[";
      for (auto mode : bound_args.modes(id)) {
        const auto res = nrad::evaluate_bound(id, inputs, lambda, mode);
        all_hold = all_hold && res.holds;
        out += (out.size() > 1 ? ",\n " : "") + result_json(res, lambda, nrad::uses_lambda(id));
      }
      std::printf("%s]\n", out.c_str());
      return all_hold ? kExitOk : kExitViolations;
    }

    if (*optimize) {
      const auto id = nrad::bound_from_name(opt_args.bound);
      nrad::OptimizerMethod m = nrad::OptimizerMethod::Auto;
      if (method == "closed-form") m = nrad::OptimizerMethod::ClosedForm;
      else if (method == "golden-section") m = nrad::OptimizerMethod::GoldenSection;
      else if (method != "auto") throw nrad::Error(nrad::ErrorCode::InvalidArgument, "unknown method '" + method + "'");
      const auto inputs = opt_args.inputs(1.0);
      std::string out = "[";
      for (auto mode : opt_args.modes(id)) {
        const auto opt = nrad::optimize_lambda(id, inputs, mode, m);
        if (out.size() > 1) out += ",\n ";
        out += "{\"bound\": " + json_string(opt_args.bound) + ", \"mode\": " + json_string(nrad::to_string(mode)) +
               ", \"location\": " + json_string(nrad::to_string(opt.location)) +
               ", \"lambda_star\": " + nrad::format_double(opt.lambda_star) +
               ", \"infimum\": " + nrad::format_double(opt.infimum) +
               ", \"method\": " + json_string(nrad::to_string(opt.method)) + "}";
      }
      std::printf("%s]\n", out.c_str());
      return kExitOk;
    }

    if (*radius) {
      const auto m = nrad::read_matrix_file(radius_matrix);
      const double w = nrad::numerical_radius(m, tol);
      std::string out = "{\"dim\": " + std::to_string(m.rows()) + ", \"w\": " + nrad::format_double(w) +
                        ", \"norm\": " + nrad::format_double(nrad::operator_norm(m));
      if (samples > 0)
        out += ", \"oracle\": " + nrad::format_double(nrad::numerical_radius_oracle(m, samples, seed));
      std::printf("%s}\n", out.c_str());
      return kExitOk;
    }
  } catch (const nrad::Error& e) {
    std::fprintf(stderr, "nrad: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
