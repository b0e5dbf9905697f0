#include "nrad/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "nrad/errors.hpp"

namespace nrad {

namespace {

struct TrialOutput {
  std::vector<BoundRow> bounds;
  std::vector<ChainRow> chains;
};

BoundRow to_row(int trial, const BoundResult& res, std::optional<double> lambda) {
  BoundRow row;
  row.trial = trial;
  row.bound = res.bound_name;
  row.mode = res.mode;
  row.lambda = lambda;
  row.r = res.params.r;
  row.n = res.params.n;
  row.alpha = res.params.alpha;
  row.exponent_p = res.exponent_p;
  row.w_power = res.w_power_value;
  row.rhs = res.rhs_value;
  row.slack = res.slack;
  row.holds = res.holds;
  return row;
}

TrialOutput run_trial(const EnsembleConfig& config, const SuiteOptions& options, const BoundParams& params,
                      int trial) {
  bool need_single = false;
  bool need_product = false;
  for (BoundId id : options.bounds) (is_product_bound(id) ? need_product : need_single) = true;
  for (ChainId id : options.chains) (is_product_chain(id) ? need_product : need_single) = true;
  const bool pair_trial = trial % 2 == 0;
  if (!pair_trial) need_product = false;

  TrialOutput out;
  if (!need_single && !need_product) return out;

  const ComplexMatrix t = generate_matrix(config, trial);
  BoundInputs inputs;
  inputs.params = params;
  if (need_single) inputs.single = compute_operator_quantities(t, params);
  if (need_product) {
    const int partner = trial + 1 < config.trials ? trial + 1 : trial;
    const ComplexMatrix s = partner == trial ? t : generate_matrix(config, partner);
    inputs.product = compute_product_quantities(t, s, params.r);
  }

  for (BoundId id : options.bounds) {
    if (is_product_bound(id) && !pair_trial) continue;
    for (BoundMode mode : supported_modes(id)) {
      if (!uses_lambda(id)) {
        out.bounds.push_back(to_row(trial, evaluate_bound(id, inputs, 1.0, mode), std::nullopt));
        continue;
      }
      for (double lambda : options.lambda_grid)
        out.bounds.push_back(to_row(trial, evaluate_bound(id, inputs, lambda, mode), lambda));
    }
  }
  for (ChainId id : options.chains) {
    if (is_product_chain(id) && !pair_trial) continue;
    for (double lambda : options.lambda_grid) {
      ChainResult res = refinement_chain(id, inputs, lambda);
      out.chains.push_back({trial, res.chain_name, lambda, std::move(res.links), res.holds});
    }
  }
  return out;
}

double relative_slack(const BoundRow& row) {
  const double scale = std::max(std::abs(row.rhs), std::abs(row.w_power));
  return scale > 0.0 ? row.slack / scale : 0.0;
}

}  // namespace

std::vector<double> default_lambda_grid() { return {0.01, 0.5, 1.0, 2.0, 100.0}; }

void finalize_report(SuiteReport& report) {
  // λ-free rows (empty lambda) sort before any λ value.
  auto bound_key = [](const BoundRow& r) {
    return std::make_tuple(r.trial, r.bound, r.lambda.has_value(), r.lambda.value_or(0.0),
                           static_cast<int>(r.mode));
  };
  std::stable_sort(report.bound_rows.begin(), report.bound_rows.end(),
                   [&](const BoundRow& a, const BoundRow& b) { return bound_key(a) < bound_key(b); });
  std::stable_sort(report.chain_rows.begin(), report.chain_rows.end(), [](const ChainRow& a, const ChainRow& b) {
    return std::tie(a.trial, a.chain, a.lambda) < std::tie(b.trial, b.chain, b.lambda);
  });

  report.violations = 0;
  for (const auto& row : report.bound_rows) report.violations += row.holds ? 0 : 1;
  for (const auto& row : report.chain_rows) report.violations += row.holds ? 0 : 1;

  struct Acc {
    int rows = 0;
    double sum = 0.0;
    double min = std::numeric_limits<double>::infinity();
  };
  std::map<std::pair<std::string, int>, Acc> acc;
  for (const auto& row : report.bound_rows) {
    Acc& a = acc[{row.bound, static_cast<int>(row.mode)}];
    const double rel = relative_slack(row);
    a.rows += 1;
    a.sum += rel;
    a.min = std::min(a.min, rel);
  }
  report.tightness.clear();
  for (const auto& [key, a] : acc)
    report.tightness.push_back({key.first, static_cast<BoundMode>(key.second), a.rows, a.sum / a.rows, a.min});
}

SuiteReport run_suite(const EnsembleConfig& config, const SuiteOptions& options) {
  config.validate();
  BoundParams params;
  params.r = options.r;
  params.n = options.n;
  params.alpha = options.alpha;
  params.validate();
  if (options.threads < 1) throw Error(ErrorCode::InvalidConfig, "threads must be >= 1");
  for (double lambda : options.lambda_grid)
    if (!std::isfinite(lambda) || lambda <= 0.0) throw Error(ErrorCode::InvalidConfig, "lambda grid values must be > 0");

  std::vector<TrialOutput> per_trial(static_cast<std::size_t>(config.trials));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (int trial = next++; trial < config.trials; trial = next++) {
      try {
        per_trial[static_cast<std::size_t>(trial)] = run_trial(config, options, params, trial);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = config.trials;
      }
    }
  };

  const int threads = std::min(options.threads, config.trials);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  SuiteReport report;
  report.config = config;
  for (auto& out : per_trial) {
    std::move(out.bounds.begin(), out.bounds.end(), std::back_inserter(report.bound_rows));
    std::move(out.chains.begin(), out.chains.end(), std::back_inserter(report.chain_rows));
  }
  finalize_report(report);
  return report;
}

}  // namespace nrad
