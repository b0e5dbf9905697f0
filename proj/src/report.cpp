#include "nrad/report.hpp"

#include <limits>

#include <json.hpp>

#include "nrad/errors.hpp"
#include "nrad/json_io.hpp"

namespace nrad {

namespace {

std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string row_json(const BoundRow& r) {
  std::string out = "{\"trial\": " + std::to_string(r.trial);
  out += ", \"bound\": " + json_string(r.bound);
  out += ", \"mode\": " + json_string(to_string(r.mode));
  out += ", \"lambda\": " + (r.lambda ? format_double(*r.lambda) : std::string("null"));
  out += ", \"r\": " + format_double(r.r);
  out += ", \"n\": " + std::to_string(r.n);
  out += ", \"alpha\": " + format_double(r.alpha);
  out += ", \"exponent_p\": " + format_double(r.exponent_p);
  out += ", \"w_power\": " + format_double(r.w_power);
  out += ", \"rhs\": " + format_double(r.rhs);
  out += ", \"slack\": " + format_double(r.slack);
  out += ", \"holds\": " + bool_str(r.holds) + "}";
  return out;
}

std::string chain_json(const ChainRow& r) {
  std::string out = "{\"trial\": " + std::to_string(r.trial);
  out += ", \"chain\": " + json_string(r.chain);
  out += ", \"lambda\": " + format_double(r.lambda);
  out += ", \"holds\": " + bool_str(r.holds);
  out += ", \"links\": [";
  for (std::size_t i = 0; i < r.links.size(); ++i) {
    if (i > 0) out += ", ";
    out += "{\"label\": " + json_string(r.links[i].label) + ", \"value\": " + format_double(r.links[i].value) + "}";
  }
  out += "]}";
  return out;
}

template <typename T, typename F>
void append_array(std::string& out, std::string_view key, const std::vector<T>& items, F&& fmt) {
  out += "  \"" + std::string(key) + "\": [";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i > 0 ? ",\n    " : "\n    ") + fmt(items[i]);
  out += items.empty() ? "]" : "\n  ]";
}

// Non-finite floats are written as null.
double number_or_nan(const nlohmann::json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

}  // namespace

ReportFormat report_format_from_name(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  throw Error(ErrorCode::InvalidArgument, "unknown report format '" + std::string(name) + "'");
}

std::string report_to_json(const SuiteReport& report) {
  const auto& c = report.config;
  std::string out = "{\n";
  out += "  \"config\": {\"ensemble\": " + json_string(to_string(c.ensemble)) + ", \"dim\": " + std::to_string(c.dim) +
         ", \"trials\": " + std::to_string(c.trials) + ", \"seed\": " + std::to_string(c.seed) + "},\n";
  out += "  \"violations\": " + std::to_string(report.violations) + ",\n";
  append_array(out, "tightness", report.tightness, [](const TightnessSummary& t) {
    return "{\"bound\": " + json_string(t.bound) + ", \"mode\": " + json_string(to_string(t.mode)) +
           ", \"rows\": " + std::to_string(t.rows) +
           ", \"mean_relative_slack\": " + format_double(t.mean_relative_slack) +
           ", \"min_relative_slack\": " + format_double(t.min_relative_slack) + "}";
  });
  out += ",\n";
  append_array(out, "bound_rows", report.bound_rows, row_json);
  out += ",\n";
  append_array(out, "chain_rows", report.chain_rows, chain_json);
  out += "\n}\n";
  return out;
}

std::string report_to_csv(const SuiteReport& report) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : report.bound_rows) {
    out += std::to_string(r.trial) + ',' + r.bound + ',' + std::string(to_string(r.mode)) + ',';
    if (r.lambda) out += format_double(*r.lambda);
    out += ',' + format_double(r.r) + ',' + std::to_string(r.n) + ',' + format_double(r.alpha) + ',' +
           format_double(r.exponent_p) + ',' + format_double(r.w_power) + ',' + format_double(r.rhs) + ',' +
           format_double(r.slack) + ',' + bool_str(r.holds) + '\n';
  }
  return out;
}

SuiteReport report_from_json(const std::string& text) {
  SuiteReport report;
  try {
    const auto doc = nlohmann::json::parse(text);
    const auto& c = doc.at("config");
    report.config.ensemble = ensemble_from_name(c.at("ensemble").get<std::string>());
    report.config.dim = c.at("dim").get<int>();
    report.config.trials = c.at("trials").get<int>();
    report.config.seed = c.at("seed").get<std::uint64_t>();
    report.violations = doc.at("violations").get<int>();
    for (const auto& t : doc.at("tightness"))
      report.tightness.push_back({t.at("bound").get<std::string>(), mode_from_name(t.at("mode").get<std::string>()),
                                  t.at("rows").get<int>(), number_or_nan(t.at("mean_relative_slack")),
                                  number_or_nan(t.at("min_relative_slack"))});
    for (const auto& j : doc.at("bound_rows")) {
      BoundRow r;
      r.trial = j.at("trial").get<int>();
      r.bound = j.at("bound").get<std::string>();
      r.mode = mode_from_name(j.at("mode").get<std::string>());
      if (!j.at("lambda").is_null()) r.lambda = j.at("lambda").get<double>();
      r.r = j.at("r").get<double>();
      r.n = j.at("n").get<int>();
      r.alpha = j.at("alpha").get<double>();
      r.exponent_p = j.at("exponent_p").get<double>();
      r.w_power = number_or_nan(j.at("w_power"));
      r.rhs = number_or_nan(j.at("rhs"));
      r.slack = number_or_nan(j.at("slack"));
      r.holds = j.at("holds").get<bool>();
      report.bound_rows.push_back(std::move(r));
    }
    for (const auto& j : doc.at("chain_rows")) {
      ChainRow r;
      r.trial = j.at("trial").get<int>();
      r.chain = j.at("chain").get<std::string>();
      r.lambda = j.at("lambda").get<double>();
      r.holds = j.at("holds").get<bool>();
      for (const auto& l : j.at("links")) r.links.push_back({l.at("label").get<std::string>(), number_or_nan(l.at("value"))});
      report.chain_rows.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed report: ") + e.what());
  }
  return report;
}

void emit_report(const SuiteReport& report, ReportFormat format, const std::filesystem::path& path) {
  write_text_file(path, format == ReportFormat::Json ? report_to_json(report) : report_to_csv(report));
}

}  // namespace nrad
