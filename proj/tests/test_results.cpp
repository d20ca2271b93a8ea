#include <catch_amalgamated.hpp>

#include <sstream>

#include "rissense/rissense.hpp"

using namespace rissense;

namespace {

std::vector<ResultRow> sample_rows() {
  ResultRow a;
  a.experiment = "budget";
  a.variable = "T";
  a.value = 3200;
  a.method = "zf";
  a.a_max = 10;
  a.m = 7;
  a.eta = 0.123456789123;
  a.pd_predicted = 0.9;
  a.required_budget_w = 1.0 / 3.0;
  a.seed = 1;
  ResultRow b = a;
  b.method = "mf";
  b.status = RowStatus::kInfeasible;
  b.eta.reset();
  b.pd_predicted.reset();
  b.required_budget_w.reset();
  ResultRow c;
  c.experiment = "simulate";
  c.method = "wmmse";
  c.a_max = 10;
  c.m = 16;
  c.pd_empirical = 0.5;
  c.pfa_empirical = 0.1;
  c.pd_predicted = 0.51;
  c.eta = 2e-3;
  c.trials = 500;
  c.seed = 18446744073709551615ULL;
  return {c, a, b};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("CSV layout") {
  CHECK(rows_to_csv({}) ==
        "experiment,variable,value,method,a_max,m,pd_empirical,pfa_empirical,pd_predicted,eta,required_budget_w,"
        "trials,seed,status\n");
  const std::string csv = rows_to_csv(sample_rows());
  const auto lines = split(csv, '\n');
  REQUIRE(lines.size() == 4);
  for (const auto& l : lines) CHECK(split(l, ',').size() == 14);
  // Sorted by experiment, variable, method, a_max, value, m.
  CHECK(lines[1].rfind("budget,T,3200,mf,10,7,,,,,,0,1,infeasible", 0) == 0);
  CHECK(lines[2] == "budget,T,3200,zf,10,7,,,0.9,0.123456789,0.333333333,0,1,ok");
  CHECK(lines[3] == "simulate,,0,wmmse,10,16,0.5,0.1,0.51,0.002,,500,18446744073709551615,ok");
}

TEST_CASE("output is independent of row order") {
  auto rows = sample_rows();
  const std::string a = rows_to_csv(rows), aj = rows_to_json(rows);
  std::reverse(rows.begin(), rows.end());
  CHECK(rows_to_csv(rows) == a);
  CHECK(rows_to_json(rows) == aj);
}

TEST_CASE("JSON round trip") {
  auto rows = sample_rows();
  const auto back = rows_from_json(rows_to_json(rows));
  sort_rows(rows);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ResultRow expect = rows[i];
    for (auto* o : {&expect.pd_empirical, &expect.pfa_empirical, &expect.pd_predicted, &expect.eta,
                    &expect.required_budget_w})
      if (*o) **o = round9(**o);
    CHECK(back[i] == expect);
  }
  CHECK(rows_from_json("[]").empty());
  CHECK_THROWS_AS(rows_from_json("{"), ConfigError);
  CHECK_THROWS_AS(parse_format("xml"), ConfigError);
  CHECK(render_rows(rows, OutputFormat::kJson) == rows_to_json(rows));
}

TEST_CASE("status names") {
  for (RowStatus s : {RowStatus::kOk, RowStatus::kInfeasible, RowStatus::kNumerical})
    CHECK(parse_status(to_string(s)) == s);
  CHECK_THROWS_AS(parse_status("maybe"), ConfigError);
}
