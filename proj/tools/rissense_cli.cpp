#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rissense/rissense.hpp"

namespace {

using namespace rissense;

struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::string out;
  std::string format = "csv";
  std::string method;
  bool full_scale = false;
};

void add_common(CLI::App* cmd, Common& c, bool needs_config = true) {
  auto* opt = cmd->add_option("--config", c.config, "scenario file (JSON)");
  if (needs_config) opt->required();
  cmd->add_option("--seed", c.seed, "base seed");
  cmd->add_option("--trials", c.trials, "Monte Carlo trials");
  cmd->add_option("--out", c.out, "output path (default: stdout)");
  cmd->add_option("--format", c.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--method", c.method, "mf|zf|mmse|wmmse|passive");
  cmd->add_flag("--full-scale", c.full_scale, "use N = 64, T = 6400");
}

struct Loaded {
  ScenarioFile file;
  Scenario& sc() { return file.scenario; }
};

Loaded load(const Common& c) {
  Loaded l{load_scenario(c.config)};
  Scenario& sc = l.sc();
  if (c.seed) sc.seed = *c.seed;
  if (c.trials) {
    if (*c.trials < 1) throw ConfigError("--trials must be >= 1");
    sc.trials = *c.trials;
  }
  if (!c.method.empty()) sc.method = parse_method(c.method);
  if (c.full_scale) sc.detector = {64, 6400, sc.detector.alpha};
  return l;
}

void write_rows(const std::vector<ResultRow>& rows, const Common& c) {
  const OutputFormat fmt = parse_format(c.format);
  if (c.out.empty()) std::cout << render_rows(rows, fmt);
  else emit_results(rows, c.out, fmt);
}

int cmd_threshold(const Common& c, int n, int t, double alpha) {
  DetectorConfig det{n, t, alpha};
  if (!c.config.empty()) det = load(c).sc().detector;
  require(det.n_antennas >= 1 && det.n_samples >= 1 && det.alpha > 0.0 && det.alpha < 1.0,
          "threshold: need N >= 1, T >= 1 and 0 < alpha < 1");
  std::printf("N=%d T=%d alpha=%.9g c=%.9g tw2_quantile=%.9g gamma_th=%.9g\n", det.n_antennas, det.n_samples,
              det.alpha, det.c(), tw2_quantile(1.0 - det.alpha), detection_threshold(det));
  return 0;
}

int cmd_optimize(const Common& c) {
  Loaded l = load(c);
  Scenario& sc = l.sc();
  const ChannelSet ch = build_channelset(sc, sc.seed, 0);
  const Rcm rcm = configure_rcm(sc, ch, sc.method);
  const double eta = population_eta(ch, rcm, sc.sources, sc.noise);
  std::ostringstream os;
  os << "# method=" << to_string(sc.method) << " M=" << ch.n_elements() << " eta=" << format_double(eta)
     << " pd_predicted=" << format_double(predicted_pd(eta, sc.detector).pd)
     << " output_power_w=" << format_double(ris_output_power(rcm, ch, sc.sources, sc.noise)) << "\n";
  os << "m,re,im,abs,arg\n";
  for (int m = 0; m < rcm.n_elements(); ++m)
    os << m << ',' << format_double(rcm.phi(m).real()) << ',' << format_double(rcm.phi(m).imag()) << ','
       << format_double(std::abs(rcm.phi(m))) << ',' << format_double(std::arg(rcm.phi(m))) << '\n';
  if (c.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!(f << os.str())) throw std::runtime_error("cannot write '" + c.out + "'");
  }
  return 0;
}

int cmd_simulate(const Common& c) {
  Loaded l = load(c);
  Scenario& sc = l.sc();
  const SimulationResult r = simulate(sc, sc.method, sc.trials, sc.seed);
  write_rows({simulation_row(sc, sc.method, r, sc.seed)}, c);
  return 0;
}

int cmd_sweep(const Common& c, const std::string& kind) {
  Loaded l = load(c);
  Scenario& sc = l.sc();
  const bool budget = kind == "budget" || (kind == "auto" && l.file.sweep);
  if (budget) {
    if (!l.file.sweep) throw ConfigError("sweep: scenario has no 'sweep' section");
    SweepSpec spec = *l.file.sweep;
    if (!c.method.empty()) spec.methods = {sc.method};
    write_rows(run_budget_sweep(sc, spec), c);
    return 0;
  }
  const MSweepResult r = run_m_sweep(sc, sc.trials, sc.seed);
  std::cerr << "unimodal=" << (r.unimodal ? "yes" : "no") << "\n";
  write_rows(r.rows, c);
  return 0;
}

int cmd_budget(const Common& c, double stop_tol) {
  Loaded l = load(c);
  Scenario& sc = l.sc();
  BudgetOptions opt;
  opt.stop_tol = stop_tol;
  const BudgetResult r = required_budget(sc.method, sc.pd_target, sc, opt);
  write_rows({budget_row(sc, r)}, c);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RIS-assisted maximum-eigenvalue spectrum sensing toolkit"};
  app.require_subcommand(1);
  Common c;

  int n = 64, t = 6400;
  double alpha = 0.1;
  auto* th = app.add_subcommand("threshold", "print gamma_th for N, T, alpha");
  add_common(th, c, false);
  th->add_option("-N,--n-antennas", n, "antennas");
  th->add_option("-T,--n-samples", t, "samples");
  th->add_option("--alpha", alpha, "false-alarm probability");

  auto* opt = app.add_subcommand("optimize", "configure the RIS for one channel draw and print phi and eta");
  add_common(opt, c);
  auto* sim = app.add_subcommand("simulate", "Monte Carlo Pd / Pfa");
  add_common(sim, c);
  std::string kind = "auto";
  auto* sw = app.add_subcommand("sweep", "element-count sweep or budget sweep");
  add_common(sw, c);
  sw->add_option("--kind", kind, "m|budget|auto")->check(CLI::IsMember({"m", "budget", "auto"}));
  double stop_tol = 1e-6;
  auto* bud = app.add_subcommand("budget", "minimum RIS budget for the target Pd");
  add_common(bud, c);
  bud->add_option("--stop-tol", stop_tol, "bisection tolerance in W");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*th) return cmd_threshold(c, n, t, alpha);
    if (*opt) return cmd_optimize(c);
    if (*sim) return cmd_simulate(c);
    if (*sw) return cmd_sweep(c, kind);
    if (*bud) return cmd_budget(c, stop_tol);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
