#pragma once

// Batch verification: every requested bound and chain on every trial of an
// ensemble. Violations are recorded in the report, never thrown.

#include <optional>
#include <string>
#include <vector>

#include "nrad/bound_catalog.hpp"
#include "nrad/ensemble.hpp"
#include "nrad/refinement_chain.hpp"

namespace nrad {

std::vector<double> default_lambda_grid();

struct SuiteOptions {
  std::vector<BoundId> bounds;
  std::vector<ChainId> chains;
  std::vector<double> lambda_grid = default_lambda_grid();
  double r = 1.0;
  int n = 1;
  double alpha = 0.5;
  int threads = 1;
};

struct BoundRow {
  int trial = 0;
  std::string bound;
  BoundMode mode = BoundMode::ExplicitCertificate;
  std::optional<double> lambda;  // empty for bounds without λ
  double r = 1.0;
  int n = 1;
  double alpha = 0.5;
  double exponent_p = 1.0;
  double w_power = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = true;

  bool operator==(const BoundRow&) const = default;
};

struct ChainRow {
  int trial = 0;
  std::string chain;
  double lambda = 1.0;
  std::vector<ChainLink> links;
  bool holds = true;

  bool operator==(const ChainRow&) const = default;
};

/// Relative slack is slack / max(|rhs|, |w_power|), 0 when both vanish.
struct TightnessSummary {
  std::string bound;
  BoundMode mode = BoundMode::ExplicitCertificate;
  int rows = 0;
  double mean_relative_slack = 0.0;
  double min_relative_slack = 0.0;

  bool operator==(const TightnessSummary&) const = default;
};

struct SuiteReport {
  EnsembleConfig config;
  std::vector<BoundRow> bound_rows;
  std::vector<ChainRow> chain_rows;
  int violations = 0;
  std::vector<TightnessSummary> tightness;

  bool operator==(const SuiteReport&) const = default;
};

/// Product bounds and chains pair trial 2k with 2k+1 (a trailing odd trial
/// with itself) and report under trial 2k. λ-free bounds give one row per
/// trial. Each bound is run in every mode it supports.
SuiteReport run_suite(const EnsembleConfig& config, const SuiteOptions& options);

/// Sorts rows and recomputes violations and tightness from them.
void finalize_report(SuiteReport& report);

}  // namespace nrad
