#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "common.hpp"

namespace rissense {

enum class RowStatus { kOk, kInfeasible, kNumerical };

inline std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::kOk: return "ok";
    case RowStatus::kInfeasible: return "infeasible";
    case RowStatus::kNumerical: return "numerical";
  }
  return "?";
}

inline RowStatus parse_status(const std::string& s) {
  if (s == "ok") return RowStatus::kOk;
  if (s == "infeasible") return RowStatus::kInfeasible;
  if (s == "numerical") return RowStatus::kNumerical;
  throw ConfigError("unknown row status '" + s + "'");
}

struct ResultRow {
  std::string experiment;
  std::string variable;  // name of the swept quantity ("" when nothing is swept)
  double value = 0.0;
  std::string method;
  double a_max = 0.0;
  int m = 0;
  std::optional<double> pd_empirical;
  std::optional<double> pfa_empirical;
  std::optional<double> pd_predicted;
  std::optional<double> eta;
  std::optional<double> required_budget_w;
  int trials = 0;
  std::uint64_t seed = 0;
  RowStatus status = RowStatus::kOk;

  auto key() const { return std::tie(experiment, variable, method, a_max, value, m); }
  bool operator==(const ResultRow&) const = default;
};

inline const char* kResultHeader =
    "experiment,variable,value,method,a_max,m,pd_empirical,pfa_empirical,pd_predicted,eta,required_budget_w,"
    "trials,seed,status";

/// Shortest round-trip-safe rendering at 9 significant digits.
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

inline double round9(double v) { return std::stod(format_double(v)); }

inline void sort_rows(std::vector<ResultRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) { return a.key() < b.key(); });
}

inline std::string rows_to_csv(std::vector<ResultRow> rows) {
  sort_rows(rows);
  std::ostringstream os;
  auto opt = [&](const std::optional<double>& v) {
    if (v) os << format_double(*v);
  };
  os << kResultHeader << '\n';
  for (const auto& r : rows) {
    os << r.experiment << ',' << r.variable << ',' << format_double(r.value) << ',' << r.method << ','
       << format_double(r.a_max) << ',' << r.m << ',';
    opt(r.pd_empirical);
    os << ',';
    opt(r.pfa_empirical);
    os << ',';
    opt(r.pd_predicted);
    os << ',';
    opt(r.eta);
    os << ',';
    opt(r.required_budget_w);
    os << ',' << r.trials << ',' << r.seed << ',' << to_string(r.status) << '\n';
  }
  return os.str();
}

inline std::string rows_to_json(std::vector<ResultRow> rows) {
  sort_rows(rows);
  // Numbers are written through the same 9-digit formatter as the CSV so both
  // outputs carry identical values.
  std::ostringstream os;
  auto num = [&](double v) { os << format_double(v); };
  auto opt = [&](const std::optional<double>& v) {
    if (v) num(*v);
    else os << "null";
  };
  os << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << (i ? ",\n " : "\n ") << "{\"experiment\": " << nlohmann::json(r.experiment).dump()
       << ", \"variable\": " << nlohmann::json(r.variable).dump() << ", \"value\": ";
    num(r.value);
    os << ", \"method\": " << nlohmann::json(r.method).dump() << ", \"a_max\": ";
    num(r.a_max);
    os << ", \"m\": " << r.m << ", \"pd_empirical\": ";
    opt(r.pd_empirical);
    os << ", \"pfa_empirical\": ";
    opt(r.pfa_empirical);
    os << ", \"pd_predicted\": ";
    opt(r.pd_predicted);
    os << ", \"eta\": ";
    opt(r.eta);
    os << ", \"required_budget_w\": ";
    opt(r.required_budget_w);
    os << ", \"trials\": " << r.trials << ", \"seed\": " << r.seed << ", \"status\": \"" << to_string(r.status)
       << "\"}";
  }
  os << (rows.empty() ? "]\n" : "\n]\n");
  return os.str();
}

inline std::vector<ResultRow> rows_from_json(const std::string& text) {
  using nlohmann::json;
  std::vector<ResultRow> rows;
  json arr;
  try {
    arr = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("result file: ") + e.what());
  }
  if (!arr.is_array()) throw ConfigError("result file: expected an array of rows");
  auto opt = [](const json& o, const char* k) -> std::optional<double> {
    if (!o.contains(k) || o.at(k).is_null()) return std::nullopt;
    return o.at(k).get<double>();
  };
  for (const auto& o : arr) {
    ResultRow r;
    r.experiment = o.at("experiment").get<std::string>();
    r.variable = o.at("variable").get<std::string>();
    r.value = o.at("value").get<double>();
    r.method = o.at("method").get<std::string>();
    r.a_max = o.at("a_max").get<double>();
    r.m = o.at("m").get<int>();
    r.pd_empirical = opt(o, "pd_empirical");
    r.pfa_empirical = opt(o, "pfa_empirical");
    r.pd_predicted = opt(o, "pd_predicted");
    r.eta = opt(o, "eta");
    r.required_budget_w = opt(o, "required_budget_w");
    r.trials = o.at("trials").get<int>();
    r.seed = o.at("seed").get<std::uint64_t>();
    r.status = parse_status(o.at("status").get<std::string>());
    rows.push_back(std::move(r));
  }
  return rows;
}

enum class OutputFormat { kCsv, kJson };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "json") return OutputFormat::kJson;
  throw ConfigError("unknown format '" + s + "' (expected csv|json)");
}

inline std::string render_rows(const std::vector<ResultRow>& rows, OutputFormat fmt) {
  return fmt == OutputFormat::kCsv ? rows_to_csv(rows) : rows_to_json(rows);
}

/// Throws std::runtime_error on I/O failure.
inline void emit_results(const std::vector<ResultRow>& rows, const std::string& path, OutputFormat fmt) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << render_rows(rows, fmt);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace rissense
