// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"

using namespace rissense;

namespace {

// Tolerances
constexpr int kPfaTrials = 2000;
constexpr double kPfaLo = 0.08, kPfaHi = 0.12;
constexpr double kPfaSeconds = 120.0;
constexpr int kSpikeTrials = 2000;
constexpr double kMeanRelTol = 0.02;
constexpr double kPdAbsTol = 0.03;
constexpr double kVarianceReportTol = 0.20;
constexpr double kSqrtA0Lo = 236.0, kSqrtA0Hi = 241.0;
constexpr double kGridRelTol = 0.01;
constexpr double kLosRelTol = 0.005;
constexpr double kIdentityRelTol = 1e-9;
constexpr double kZfOrthTol = 1e-10;
constexpr double kStopTol = 1e-6;
constexpr double kBudgetSlack = 2.0 * kStopTol;
constexpr double kMonotoneTol = 1e-10;

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Scenario reference_scenario(int k) {
  Scenario sc;
  sc.geometry.interferer_pos = place_interferers(k, sc.geometry.ris_pos, 50, 60, 7);
  sc.placement = InterfererPlacement{};
  sc.angles = derive_angles(sc.geometry);
  sc.channel = ChannelKind::kLos;
  sc.direct_links = false;
  sc.detector = {64, 6400, 0.1};
  sc.sources.p.assign(k + 1, 1.0);
  sc.sources.zeta.assign(k + 1, 1.0);
  sc.noise = {1e-11, 1e-11};
  return sc;
}

void criterion_threshold() {
  oracle::TestRng rng(101);
  const ChannelSet ch = oracle::random_rayleigh_channelset(rng, 32, 4, 1, true);
  const Rcm rcm{rng.unit_phases(4) * 0.8, RcmMode::kActive, 1.0, 10.0};
  // Always-on interferer: per-interval activity with zeta < 1 is not white after averaging.
  const SourceModel src{{1.0, 0.7}, {1.0, 1.0}};
  const DetectorConfig det{32, 3200, 0.1};
  const auto t0 = std::chrono::steady_clock::now();
  const DetectionEstimate e = run_detection_fixed(ch, rcm, src, {0.3, 1.0}, det, Hypothesis::kH0, kPfaTrials, 2024);
  const double secs = seconds_since(t0);
  report(1, "threshold calibration", e.rate >= kPfaLo && e.rate <= kPfaHi && secs < kPfaSeconds,
         fmt("Pfa=%.4f over %d H0 trials (target [%.2f, %.2f]), gamma_th=%.6f, %.1f s", e.rate, e.trials, kPfaLo,
             kPfaHi, detection_threshold(det), secs));
}

void criterion_spiked() {
  const DetectorConfig det{32, 3200, 0.1};
  oracle::TestRng rng(202);
  const CVec d0 = rng.cvec(32);
  ChannelSet ch;
  ch.betas = {{1.0}, {1.0}, 1.0};
  ch.d = {d0};
  ch.f = {CVec::Zero(1)};
  ch.G = CMat::Zero(32, 1);
  const Rcm off{CVec::Zero(1), RcmMode::kActive, 1.0, 0.0};
  const NoiseModel nz{0.0, 1.0};
  bool pass = true;
  std::string detail;
  for (double eta : {0.5, 1.0, 2.0}) {
    const SourceModel src{{eta / d0.squaredNorm()}, {1.0}};
    const double eta_pop = population_eta(ch, off, src, nz);
    const SpikedStats s = spiked_stats(eta_pop, det);
    const double pd_pred = predicted_pd(s, det.alpha).pd;
    const DetectionEstimate e =
        run_detection_fixed(ch, off, src, nz, det, Hypothesis::kH1, kSpikeTrials, 303 + static_cast<int>(eta * 10));
    const double mean_err = std::abs(e.mean_lambda - s.mu_a) / s.mu_a;
    const double pd_err = std::abs(e.rate - pd_pred);
    const double var_ratio = e.var_lambda / s.v_a;
    pass = pass && mean_err <= kMeanRelTol && pd_err <= kPdAbsTol;
    detail += fmt("eta=%.1f: mean %.5f vs mu_a %.5f (%.2f%%), Pd %.4f vs %.4f, var ratio %.3f%s; ", eta, e.mean_lambda,
                  s.mu_a, 100 * mean_err, e.rate, pd_pred, var_ratio,
                  std::abs(var_ratio - 1.0) > kVarianceReportTol ? " (variance mismatch > 20%, documented)" : "");
  }
  // Near the detection edge Pd is informative; reported, not gated.
  for (double target : {0.5, 0.9}) {
    const double eta = solve_min_eta(target, det);
    const SourceModel src{{eta / d0.squaredNorm()}, {1.0}};
    const DetectionEstimate e = run_detection_fixed(ch, off, src, nz, det, Hypothesis::kH1, kSpikeTrials,
                                                    404 + static_cast<int>(target * 10));
    detail += fmt("[info] eta=%.4f: Pd %.4f vs %.4f; ", eta, e.rate, predicted_pd(eta, det).pd);
  }
  report(2, "spiked-model fidelity", pass, detail);
}

void criterion_sqrt_a0() {
  const Scenario sc = reference_scenario(0);
  const LinkGains g = compute_link_gains(sc);
  const NoInterferenceConstants k =
      no_interference_constants(64, g.beta_g, g.beta_f[0], sc.sources.p[0], sc.noise, sc.power);
  const double at_1mw = std::sqrt(optimal_amplitude(k, dbm_to_watts(0.0), 1e9).a0);
  const double at_10dbm = std::sqrt(optimal_amplitude(k, dbm_to_watts(10.0), 1e9).a0);
  report(3, "sqrt(A0) reproduction", at_1mw >= kSqrtA0Lo && at_1mw <= kSqrtA0Hi,
         fmt("sqrt(A0)=%.2f at P=0 dBm (range [%.0f, %.0f]); %.2f at P=10 dBm; small-budget limit %.2f", at_1mw,
             kSqrtA0Lo, kSqrtA0Hi, at_10dbm, std::sqrt(k.c1 / k.c2)));
}

void criterion_passive_count() {
  const int m = passive_elements(dbm_to_watts(10.0), dbm_to_watts(-10.0));
  report(4, "passive element count", m == 100, fmt("M=%d for a 10 dBm budget at P_C=-10 dBm", m));
}

// Coarse polar grid over (a_m, theta_m), then zoomed grids around the best
// point. Points over the budget are scaled back onto it.
double grid_search_eta(const ChannelSet& ch, const SourceModel& src, const NoiseModel& nz, double p_out,
                       double a_max) {
  const int m = ch.n_elements();
  const RVec j = power_weights(ch, src, nz.sigma1_sq).head(m);
  auto eval = [&](const RVec& a, const RVec& th) {
    Rcm r{CVec(m), RcmMode::kActive, a_max, p_out};
    double pw = 0.0;
    for (int i = 0; i < m; ++i) pw += j(i) * a(i) * a(i);
    const double s = pw > p_out ? std::sqrt(p_out / pw) : 1.0;
    for (int i = 0; i < m; ++i) r.phi(i) = std::polar(s * a(i), th(i));
    return population_eta(ch, r, src, nz);
  };
  RVec best_a = RVec::Zero(m), best_t = RVec::Zero(m);
  double best = -1.0;
  std::function<void(int, RVec&, RVec&, const RVec&, const RVec&, double, double, int, int)> rec;
  rec = [&](int i, RVec& a, RVec& t, const RVec& ca, const RVec& ct, double wa, double wt, int na, int nt) {
    if (i == m) {
      const double v = eval(a, t);
      if (v > best) {
        best = v;
        best_a = a;
        best_t = t;
      }
      return;
    }
    for (int ia = 0; ia < na; ++ia) {
      a(i) = std::clamp(ca(i) - wa + 2.0 * wa * ia / std::max(na - 1, 1), 0.0, a_max);
      for (int it = 0; it < nt; ++it) {
        t(i) = ct(i) - wt + 2.0 * wt * it / nt;
        rec(i + 1, a, t, ca, ct, wa, wt, na, nt);
      }
    }
  };
  RVec a(m), t(m);
  rec(0, a, t, RVec::Constant(m, a_max / 2), RVec::Zero(m), a_max / 2, kPi, 17, 36);
  double wa = a_max / 16, wt = kPi / 18;
  for (int round = 0; round < 12; ++round) {
    const RVec ca = best_a, ct = best_t;
    rec(0, a, t, ca, ct, wa, wt, 9, 10);
    wa *= 0.4;
    wt *= 0.4;
  }
  return best;
}

void criterion_wmmse_optimality() {
  oracle::TestRng rng(505);
  double worst_grid = 0.0, worst_los = 0.0;
  int grid_runs = 0, los_runs = 0;
  for (int rep = 0; rep < 16; ++rep) {
    const int m = rep % 2 + 1, k = rep % 3 == 0 ? 0 : 1;
    const ChannelSet ch = oracle::random_rayleigh_channelset(rng, 4, m, k, true);
    const SourceModel src = oracle::random_sources(rng, k);
    const NoiseModel nz{rng.uniform(0.05, 0.5), 1.0};
    const double a_max = rng.uniform(0.5, 3.0), p_out = rng.uniform(0.5, 10.0);
    WmmseOptions opt;
    opt.tol = 1e-12;
    opt.max_iter = 5000;
    const double w = wmmse_active(ch, src, nz, p_out, a_max, std::nullopt, opt).eta;
    const double g = grid_search_eta(ch, src, nz, p_out, a_max);
    worst_grid = std::max(worst_grid, std::abs(w - g) / g);
    ++grid_runs;
  }
  for (int rep = 0; rep < 20; ++rep) {
    const int n = rng.integer(2, 8), m = rng.integer(1, 12);
    ChannelSet ch = oracle::random_los_channelset(rng, n, m, 0);
    const SourceModel src{{rng.uniform(0.5, 2.0)}, {1.0}};
    const NoiseModel nz{rng.uniform(0.01, 0.3), rng.uniform(0.5, 2.0)};
    const double a_max = rng.uniform(0.5, 3.0), p_out = rng.uniform(0.1, 20.0);
    const double p_in = ch.betas.beta_f[0] * src.p[0] + nz.sigma1_sq;
    const double a = std::min(a_max, std::sqrt(p_out / (m * p_in)));
    const double ref = eta_active_no_interference(n, m, a, ch.betas.beta_f[0], ch.betas.beta_g, src.p[0], nz);
    WmmseOptions opt;
    opt.tol = 1e-12;
    opt.max_iter = 5000;
    const double w = wmmse_active(ch, src, nz, p_out, a_max, std::nullopt, opt).eta;
    worst_los = std::max(worst_los, std::abs(w - ref) / ref);
    ++los_runs;
  }
  report(5, "WMMSE optimality", worst_grid <= kGridRelTol && worst_los <= kLosRelTol,
         fmt("M<=2 vs polar grid: worst %.4f%% over %d instances (tol 1%%); K=0 LoS vs closed form: worst %.5f%% over "
             "%d instances (tol 0.5%%)",
             100 * worst_grid, grid_runs, 100 * worst_los, los_runs));
}

void criterion_identities() {
  oracle::TestRng rng(606);
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const int n = rng.integer(2, 8), k = rng.integer(0, 4), m = rng.integer(1, 12);
    const ChannelSet ch = oracle::random_los_channelset(rng, n, m, k);
    const SourceModel src = oracle::random_sources(rng, k);
    const NoiseModel nz{rng.uniform(0.0, 0.5), rng.uniform(0.5, 2.0)};
    const CVec phi = rng.cvec(m) * rng.uniform(0.2, 2.0);
    const Rcm r{phi, RcmMode::kActive, 1e9, 1e9};
    // Direct: p0 h0^H R^-1 h0 with an explicit inverse.
    CMat rr = nz.sigma2_sq * CMat::Identity(n, n);
    const CMat gp = ch.G * phi.asDiagonal();
    rr += nz.sigma1_sq * gp * gp.adjoint();
    for (int s = 1; s <= k; ++s) {
      const CVec h = ch.d[s] + gp * ch.f[s];
      rr += src.zeta[s] * src.p[s] * h * h.adjoint();
    }
    const CVec h0 = ch.d[0] + gp * ch.f[0];
    const double direct = src.p[0] * (h0.adjoint() * Eigen::FullPivLU<CMat>(rr).inverse() * h0)(0, 0).real();
    // Sherman-Morrison on the rank-one G = sqrt(beta_G) a_G b_G^H.
    const CVec& a_g = ch.los->a_g;
    const CVec bphi = ch.los->b_g.conjugate().cwiseProduct(phi);  // row b_G^H Phi as a vector
    double s_int = nz.sigma1_sq * bphi.squaredNorm();
    for (int s = 1; s <= k; ++s) s_int += src.zeta[s] * src.p[s] * std::norm(bphi.dot(ch.f[s].conjugate()));
    const double g0 = std::norm(bphi.dot(ch.f[0].conjugate()));
    const double bg = ch.betas.beta_g;
    const double sm = src.p[0] * bg * g0 * a_g.squaredNorm() / (nz.sigma2_sq + bg * s_int * a_g.squaredNorm());
    const NoiseModel nz_ctx = nz;
    const ClosedFormContext ctx = make_context(ch, src, nz_ctx, RisPowerModel{});
    const double rational = rational_eta(ctx, phi);
    const double pop = population_eta(ch, r, src, nz);
    for (double v : {sm, rational, pop}) worst = std::max(worst, std::abs(v - direct) / direct);
  }
  report(6, "algebraic identities", worst <= kIdentityRelTol,
         fmt("worst relative gap %.3e across direct inverse, Sherman-Morrison, rational form and population eta on "
             "100 instances (tol %.0e)",
             worst, kIdentityRelTol));
}

void criterion_zf() {
  oracle::TestRng rng(707);
  double worst = 0.0;
  int checked = 0, degenerate = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const int n = rng.integer(2, 8), k = rng.integer(1, 4), m = rng.integer(k + 1, 14);
    const ChannelSet ch = oracle::random_los_channelset(rng, n, m, k);
    const SourceModel src = oracle::random_sources(rng, k);
    const ClosedFormContext ctx = make_context(ch, src, {rng.uniform(0.01, 0.5), 1.0}, RisPowerModel{});
    const double a_max = rng.uniform(0.5, 3.0), p_out = rng.uniform(0.1, 10.0);
    ZfConfig zf;
    try {
      zf = zf_phi(ctx, a_max, p_out);
    } catch (const NumericalError&) {
      ++degenerate;  // nearly coincident arrival angles
      continue;
    }
    ++checked;
    for (int s = 1; s <= k; ++s)
      worst = std::max(worst, std::abs(ctx.q.col(s).dot(zf.phi.conjugate())) / (ctx.q.col(s).norm() * zf.phi.norm()));
  }
  bool floor_ok = true;
  double min_margin = std::numeric_limits<double>::infinity();
  int budgets = 0;
  for (int k = 1; k <= 5; ++k) {
    for (double a_max : {1.0, 10.0}) {
      Scenario sc = reference_scenario(k);
      sc.a_max = a_max;
      const BudgetResult r = required_budget(Method::kZf, 0.9, sc);
      const double floor = (k + 1) * sc.power.per_active_element();
      floor_ok = floor_ok && r.required_power >= floor;
      min_margin = std::min(min_margin, r.required_power / floor);
      ++budgets;
    }
  }
  report(7, "ZF contract", worst <= kZfOrthTol && floor_ok && checked >= 90,
         fmt("worst |q_k^H phi| relative %.3e on %d instances (%d singular draws rejected by zf_phi, tol %.0e); %d ZF "
             "budgets, min budget/floor ratio %.3f",
             worst, checked, degenerate, kZfOrthTol, budgets, min_margin));
}

struct TrendCheck {
  bool ok = true;
  std::string notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes += what + "; ";
    }
  }
};

void criterion_trends() {
  BudgetOptions opt;
  opt.stop_tol = kStopTol;
  TrendCheck tc;
  const std::vector<Method> all{Method::kMf, Method::kZf, Method::kMmse, Method::kWmmse};
  const std::vector<Method> mono{Method::kMf, Method::kMmse, Method::kWmmse};
  auto budget = [&](Method m, const Scenario& sc) { return required_budget(m, sc.pd_target, sc, opt).required_power; };
  auto ordering = [&](const Scenario& sc, const std::string& where) {
    const double mmse = budget(Method::kMmse, sc), mf = budget(Method::kMf, sc);
    tc.require(mmse <= mf + kBudgetSlack, "MMSE > MF at " + where);
    if (sc.num_interferers() + 1 <= m_max(opt.p_high, sc.power.p_c, sc.power.p_dc))
      tc.require(mmse <= budget(Method::kZf, sc) + kBudgetSlack, "MMSE > ZF at " + where);
  };
  int points = 0;

  const Scenario base = reference_scenario(5);
  for (Method m : all) {
    double prev = std::numeric_limits<double>::infinity();
    for (int t : {1600, 3200, 6400, 12800, 25600}) {
      const Scenario s = apply_sweep_value(base, SweepVariable::kT, t);
      const double p = budget(m, s);
      tc.require(p <= prev + kBudgetSlack, to_string(m) + " increases with T at " + std::to_string(t));
      prev = p;
      ++points;
    }
  }
  for (int t : {1600, 6400, 25600}) ordering(apply_sweep_value(base, SweepVariable::kT, t), "T=" + std::to_string(t));

  for (Method m : mono) {
    double prev = 0.0;
    for (double z : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const Scenario s = apply_sweep_value(base, SweepVariable::kZeta, z);
      const double p = budget(m, s);
      tc.require(p >= prev - kBudgetSlack, to_string(m) + " decreases with zeta at " + fmt("%.2f", z));
      prev = p;
      ++points;
    }
    prev = 0.0;
    for (double pk : {0.0, 10.0, 20.0, 30.0}) {
      const Scenario s = apply_sweep_value(base, SweepVariable::kP, pk);
      const double p = budget(m, s);
      tc.require(p >= prev - kBudgetSlack, to_string(m) + " decreases with p_k at " + fmt("%.0f dBm", pk));
      prev = p;
      ++points;
    }
    prev = 0.0;
    for (int k = 0; k <= 5; ++k) {
      const Scenario s = apply_sweep_value(base, SweepVariable::kK, k);
      const double p = budget(m, s);
      tc.require(p >= prev - kBudgetSlack, to_string(m) + " decreases with K at " + std::to_string(k));
      prev = p;
      ++points;
    }
  }
  for (double z : {0.0, 0.5, 1.0}) ordering(apply_sweep_value(base, SweepVariable::kZeta, z), fmt("zeta=%.1f", z));
  for (int k : {1, 3, 5}) ordering(apply_sweep_value(base, SweepVariable::kK, k), "K=" + std::to_string(k));

  const Scenario z0 = apply_sweep_value(base, SweepVariable::kZeta, 0.0);
  const double gap = std::abs(budget(Method::kMf, z0) - budget(Method::kMmse, z0));
  tc.require(gap <= kBudgetSlack, fmt("MF and MMSE differ by %.3e W at zeta=0", gap));
  report(8, "budget trends", tc.ok,
         fmt("%d sweep points over T, zeta, p_k, K; |MF-MMSE| at zeta=0 = %.3e W (tol %.0e)", points, gap,
             kBudgetSlack) +
             (tc.ok ? "" : "; violations: " + tc.notes));
}

void criterion_mm_monotone() {
  oracle::TestRng rng(909);
  double worst = -std::numeric_limits<double>::infinity();
  int iterations = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const int n = rng.integer(2, 8), m = rng.integer(1, 10), k = rng.integer(0, 3);
    const ChannelSet ch = oracle::random_rayleigh_channelset(rng, n, m, k, rep % 4 != 0);
    const SourceModel src = oracle::random_sources(rng, k);
    const NoiseModel nz{rng.uniform(0.0, 0.5), rng.uniform(0.5, 2.0)};
    WmmseOptions opt;
    opt.tol = 1e-10;
    opt.max_iter = 300;
    const WmmseResult r = wmmse_active(ch, src, nz, rng.uniform(0.5, 10.0), rng.uniform(0.5, 3.0), std::nullopt, opt);
    for (std::size_t i = 1; i < r.objective_trace.size(); ++i)
      worst = std::max(worst, r.objective_trace[i] - r.objective_trace[i - 1]);
    iterations += r.iterations;
  }
  report(9, "MM monotonicity", worst <= kMonotoneTol,
         fmt("largest surrogate increase %.3e over 100 runs, %d iterations (tol %.0e)", worst, iterations,
             kMonotoneTol));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_determinism() {
  const ScenarioFile f = load_scenario(RISSENSE_TEST_DATA "/simulate_small.json");
  const Scenario& sc = f.scenario;
  auto run = [&] { return rows_to_csv({simulation_row(sc, sc.method, simulate(sc, sc.method, sc.trials, sc.seed), sc.seed)}); };
  const std::string a = run(), b = run();
  bool cli_same = true;
  std::string cli_note = "CLI not checked";
#ifdef RISSENSE_CLI
  const std::string out_a = "acceptance_sim_a.csv", out_b = "acceptance_sim_b.csv";
  const std::string cmd = std::string(RISSENSE_CLI) + " simulate --config " RISSENSE_TEST_DATA "/simulate_small.json --out ";
  const int rc_a = std::system((cmd + out_a).c_str()), rc_b = std::system((cmd + out_b).c_str());
  const std::string fa = read_file(out_a), fb = read_file(out_b);
  cli_same = rc_a == 0 && rc_b == 0 && !fa.empty() && fa == fb && fa == a;
  cli_note = fmt("CLI runs %s (%zu bytes)", cli_same ? "byte-identical and equal to the library output" : "differ",
                 fa.size());
#endif
  report(10, "determinism", a == b && cli_same, fmt("library runs %s; ", a == b ? "identical" : "differ") + cli_note);
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> steps{criterion_threshold,    criterion_spiked,     criterion_sqrt_a0,
                                                 criterion_passive_count, criterion_wmmse_optimality,
                                                 criterion_identities,   criterion_zf,         criterion_trends,
                                                 criterion_mm_monotone,  criterion_determinism};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      steps[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), "criterion", false, std::string("exception: ") + e.what());
    }
  }
  std::printf("%s: %d of %zu criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures, steps.size());
  return failures ? 1 : 0;
}
