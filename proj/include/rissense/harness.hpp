#pragma once

// Monte Carlo detection experiments and parameter sweeps.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "budget.hpp"
#include "channel.hpp"
#include "config.hpp"
#include "optimizer.hpp"
#include "results.hpp"
#include "sensing.hpp"
#include "types.hpp"

namespace rissense {

struct DetectionEstimate {
  int trials = 0;
  int detections = 0;
  double rate = 0.0;
  double std_error = 0.0;  // binomial
  double mean_lambda = 0.0;
  double var_lambda = 0.0;
  double mean_eta = 0.0;
  double mean_pd_predicted = 0.0;
};

namespace detail {

struct Accumulator {
  int trials = 0, detections = 0;
  double sum_l = 0.0, sum_l2 = 0.0, sum_eta = 0.0, sum_pd = 0.0;

  void add(double lambda, bool detected, double eta, double pd) {
    ++trials;
    detections += detected ? 1 : 0;
    sum_l += lambda;
    sum_l2 += lambda * lambda;
    sum_eta += eta;
    sum_pd += pd;
  }

  DetectionEstimate finish() const {
    DetectionEstimate e;
    e.trials = trials;
    e.detections = detections;
    if (trials == 0) return e;
    e.rate = static_cast<double>(detections) / trials;
    e.std_error = std::sqrt(e.rate * (1.0 - e.rate) / trials);
    e.mean_lambda = sum_l / trials;
    e.var_lambda = trials > 1 ? (sum_l2 - trials * e.mean_lambda * e.mean_lambda) / (trials - 1) : 0.0;
    e.mean_eta = sum_eta / trials;
    e.mean_pd_predicted = sum_pd / trials;
    return e;
  }
};

// Signal substreams: two per trial so H0 and H1 draws never overlap.
inline std::uint64_t signal_index(std::uint64_t trial, Hypothesis h) {
  return 2 * trial + (h == Hypothesis::kH1 ? 1 : 0);
}

}  // namespace detail

/// One sensing interval: sample, whiten with the analytic covariance, and
/// compare lambda_max with gamma_th.
struct SensingOutcome {
  double lambda_max = 0.0;
  bool detected = false;
};

inline SensingOutcome sense_once(const ChannelSet& ch, const Rcm& rcm, const SourceModel& src, const NoiseModel& noise,
                                 const DetectorConfig& det, double gamma_th, const CMat& inv_sqrt, Hypothesis hyp,
                                 std::uint64_t seed, std::uint64_t index) {
  const CMat y = sample_signals(ch, rcm, src, noise, hyp, det.n_samples, seed, index);
  const double l = max_eig_statistic(inv_sqrt * y);
  return {l, l > gamma_th};
}

/// Monte Carlo over signal draws for a fixed channel set and RCM.
inline DetectionEstimate run_detection_fixed(const ChannelSet& ch, const Rcm& rcm, const SourceModel& src,
                                             const NoiseModel& noise, const DetectorConfig& det, Hypothesis hyp,
                                             int trials, std::uint64_t seed) {
  require(trials >= 1, "run_detection_fixed: trials must be >= 1");
  require_dims(ch.n_antennas() == det.n_antennas, "run_detection_fixed: N does not match the detector");
  const double gamma = detection_threshold(det);
  const CMat r = noise_covariance(ch, rcm, src, noise);
  const CMat inv_sqrt = hermitian_root(r).inv_sqrt;
  const double eta = population_eta(ch, rcm, src, noise);
  const double pd = hyp == Hypothesis::kH1 ? predicted_pd(eta, det).pd : det.alpha;
  detail::Accumulator acc;
  for (int t = 0; t < trials; ++t) {
    const auto o = sense_once(ch, rcm, src, noise, det, gamma, inv_sqrt, hyp, seed, detail::signal_index(t, hyp));
    acc.add(o.lambda_max, o.detected, eta, pd);
  }
  return acc.finish();
}

/// Element layout used when a sweep needs M elements.
inline RisShape shape_for(int m, int mv) { return m % mv == 0 ? RisShape{m / mv, mv} : RisShape{m, 1}; }

/// RIS configuration for one channel realization according to `method`.
inline Rcm configure_rcm(const Scenario& sc, const ChannelSet& ch, Method method) {
  const int m = ch.n_elements();
  if (method == Method::kPassive) {
    if (ch.los && sc.num_interferers() == 0) {
      Rcm r{CVec(m), RcmMode::kPassiveUnit, 1.0, std::numeric_limits<double>::infinity()};
      const RVec th = mf_phases(ch.los->b_g, ch.los->a_f[0]);
      for (int i = 0; i < m; ++i) r.phi(i) = std::polar(1.0, th(i));
      return r;
    }
    return wmmse_passive(ch, sc.sources, sc.noise, RcmMode::kPassiveUnit).rcm;
  }
  const double p_out = sc.power.p_out_bar(m);
  if (!(p_out > 0.0))
    throw InfeasibleError("configure_rcm: " + std::to_string(m) + " active elements exhaust the budget");
  if (method == Method::kWmmse) return wmmse_active(ch, sc.sources, sc.noise, p_out, sc.a_max).rcm;
  if (!ch.los) throw ConfigError("configure_rcm: method '" + to_string(method) + "' needs LoS channels");
  const ClosedFormContext ctx = make_context(ch, sc.sources, sc.noise, sc.power);
  CVec phi;
  switch (method) {
    case Method::kMf: phi = mf_phi(ctx, sc.a_max, p_out).phi; break;
    case Method::kZf: phi = zf_phi(ctx, sc.a_max, p_out).phi; break;
    default: phi = mmse_phi(ctx, rho_cap(ctx, p_out, sc.a_max)).phi; break;
  }
  Rcm r{phi, RcmMode::kActive, sc.a_max, p_out};
  // The closed forms relax the per-element cap; pull the result back into the
  // feasible set so the simulated RIS is realizable.
  for (Eigen::Index i = 0; i < r.phi.size(); ++i)
    if (std::abs(r.phi(i)) > sc.a_max) r.phi(i) *= sc.a_max / std::abs(r.phi(i));
  const double pw = ris_output_power(r, ch, sc.sources, sc.noise);
  if (pw > p_out) r.phi *= std::sqrt(p_out / pw);
  return r;
}

struct SimulationResult {
  DetectionEstimate h1;
  DetectionEstimate h0;
};

/// Per trial: draw channels (Rayleigh) or reuse the LoS set, configure the RIS
/// by `method`, then sense once under each hypothesis.
inline SimulationResult simulate(const Scenario& sc, Method method, int trials, std::uint64_t seed,
                                 bool with_h0 = true) {
  require(trials >= 1, "simulate: trials must be >= 1");
  const double gamma = detection_threshold(sc.detector);
  detail::Accumulator a1, a0;
  std::optional<std::pair<ChannelSet, Rcm>> fixed;
  for (int t = 0; t < trials; ++t) {
    ChannelSet ch;
    Rcm rcm;
    if (sc.channel == ChannelKind::kLos) {
      if (!fixed) {
        ChannelSet c = build_los_channelset(sc);
        Rcm r = configure_rcm(sc, c, method);
        fixed.emplace(std::move(c), std::move(r));
      }
      ch = fixed->first;
      rcm = fixed->second;
    } else {
      ch = sample_rayleigh_channelset(sc, seed, t);
      rcm = configure_rcm(sc, ch, method);
    }
    const CMat inv_sqrt = hermitian_root(noise_covariance(ch, rcm, sc.sources, sc.noise)).inv_sqrt;
    const double eta = population_eta(ch, rcm, sc.sources, sc.noise);
    const double pd = predicted_pd(eta, sc.detector).pd;
    auto o1 = sense_once(ch, rcm, sc.sources, sc.noise, sc.detector, gamma, inv_sqrt, Hypothesis::kH1, seed,
                         detail::signal_index(t, Hypothesis::kH1));
    a1.add(o1.lambda_max, o1.detected, eta, pd);
    if (with_h0) {
      auto o0 = sense_once(ch, rcm, sc.sources, sc.noise, sc.detector, gamma, inv_sqrt, Hypothesis::kH0, seed,
                           detail::signal_index(t, Hypothesis::kH0));
      a0.add(o0.lambda_max, o0.detected, eta, sc.detector.alpha);
    }
  }
  return {a1.finish(), a0.finish()};
}

inline DetectionEstimate run_detection_mc(const Scenario& sc, Method method, Hypothesis hyp, int trials,
                                          std::uint64_t seed) {
  if (hyp == Hypothesis::kH1) return simulate(sc, method, trials, seed, false).h1;
  // H0 alone: channels and RCM are still drawn per trial so the whitening
  // matches the configured system.
  require(trials >= 1, "run_detection_mc: trials must be >= 1");
  return simulate(sc, method, trials, seed, true).h0;
}

inline ResultRow simulation_row(const Scenario& sc, Method method, const SimulationResult& r, std::uint64_t seed) {
  ResultRow row;
  row.experiment = "simulate";
  row.method = to_string(method);
  row.a_max = method == Method::kPassive ? 1.0 : sc.a_max;
  row.m = sc.n_elements();
  row.pd_empirical = r.h1.rate;
  if (r.h0.trials > 0) row.pfa_empirical = r.h0.rate;
  row.pd_predicted = r.h1.mean_pd_predicted;
  row.eta = r.h1.mean_eta;
  row.trials = r.h1.trials;
  row.seed = seed;
  return row;
}

struct MSweepResult {
  std::vector<ResultRow> rows;
  bool unimodal = true;  // empirical Pd over M rises then falls (ties allowed)
};

/// True when the sequence never increases again after it first decreases.
inline bool is_unimodal(const std::vector<double>& v, double slack = 0.0) {
  bool falling = false;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] < v[i - 1] - slack) falling = true;
    else if (falling && v[i] > v[i - 1] + slack) return false;
  }
  return true;
}

/// Detection probability against the number of active elements at a fixed
/// budget, plus passive and no-RIS baselines.
inline MSweepResult run_m_sweep(const Scenario& sc, int trials, std::uint64_t seed) {
  std::vector<int> ms = sc.m_sweep;
  if (ms.empty())
    for (int m = 1; m <= m_max(sc.power.p_aris, sc.power.p_c, sc.power.p_dc); ++m) ms.push_back(m);
  const Method active = sc.method == Method::kPassive ? Method::kWmmse : sc.method;
  MSweepResult out;
  std::vector<double> curve;
  auto make_row = [&](const std::string& method, int m, double a_max, const DetectionEstimate& e) {
    ResultRow row;
    row.experiment = "m_sweep";
    row.variable = "M";
    row.value = m;
    row.method = method;
    row.a_max = a_max;
    row.m = m;
    row.pd_empirical = e.rate;
    row.pd_predicted = e.mean_pd_predicted;
    row.eta = e.mean_eta;
    row.trials = e.trials;
    row.seed = seed;
    return row;
  };
  for (int m : ms) {
    Scenario s = sc;
    s.ris = shape_for(m, sc.ris.mv);
    if (!(s.power.p_out_bar(m) > 0.0)) {
      ResultRow row = make_row(to_string(active), m, sc.a_max, {});
      row.pd_empirical.reset();
      row.pd_predicted.reset();
      row.eta.reset();
      row.status = RowStatus::kInfeasible;
      out.rows.push_back(row);
      continue;
    }
    const DetectionEstimate e = simulate(s, active, trials, seed, false).h1;
    out.rows.push_back(make_row(to_string(active), m, sc.a_max, e));
    curve.push_back(e.rate);
  }
  out.unimodal = is_unimodal(curve);

  const int mp = passive_elements(sc.power.p_pris, sc.power.p_c);
  if (mp >= 1) {
    Scenario s = sc;
    s.ris = shape_for(mp, sc.ris.mv);
    out.rows.push_back(make_row("passive", mp, 1.0, simulate(s, Method::kPassive, trials, seed, false).h1));
  }
  // No RIS: a single element switched off.
  {
    Scenario s = sc;
    s.ris = {1, 1};
    detail::Accumulator acc;
    const double gamma = detection_threshold(s.detector);
    for (int t = 0; t < trials; ++t) {
      const ChannelSet ch = build_channelset(s, seed, t);
      const Rcm off{CVec::Zero(1), RcmMode::kActive, 1.0, 0.0};
      const CMat inv_sqrt = hermitian_root(noise_covariance(ch, off, s.sources, s.noise)).inv_sqrt;
      const double eta = population_eta(ch, off, s.sources, s.noise);
      const auto o = sense_once(ch, off, s.sources, s.noise, s.detector, gamma, inv_sqrt, Hypothesis::kH1, seed,
                                detail::signal_index(t, Hypothesis::kH1));
      acc.add(o.lambda_max, o.detected, eta, predicted_pd(eta, s.detector).pd);
    }
    ResultRow row = make_row("none", 0, 0.0, acc.finish());
    out.rows.push_back(row);
  }
  sort_rows(out.rows);
  return out;
}

/// Applies one sweep coordinate to a scenario.
inline Scenario apply_sweep_value(const Scenario& sc, SweepVariable var, double value) {
  Scenario s = sc;
  switch (var) {
    case SweepVariable::kT:
      require(value >= 1.0 && value == std::floor(value), "sweep: T values must be positive integers");
      s.detector.n_samples = static_cast<int>(value);
      break;
    case SweepVariable::kZeta:
      require(value >= 0.0 && value <= 1.0, "sweep: zeta values must lie in [0, 1]");
      for (std::size_t k = 1; k < s.sources.zeta.size(); ++k) s.sources.zeta[k] = value;
      break;
    case SweepVariable::kP:
      for (std::size_t k = 1; k < s.sources.p.size(); ++k) s.sources.p[k] = dbm_to_watts(value);
      break;
    case SweepVariable::kK:
      require(value >= 0.0 && value == std::floor(value), "sweep: K values must be nonnegative integers");
      s = with_interferers(s, static_cast<int>(value));
      break;
  }
  return s;
}

/// Required RIS budget per grid point, method and a_max. Infeasible or
/// numerically failed cells are reported with a status, not thrown.
inline std::vector<ResultRow> run_budget_sweep(const Scenario& sc, const SweepSpec& spec,
                                               const BudgetOptions& opt = {}) {
  std::vector<ResultRow> rows;
  std::vector<double> a_values = spec.a_max_values.empty() ? std::vector<double>{sc.a_max} : spec.a_max_values;
  for (double value : spec.values) {
    const Scenario base = apply_sweep_value(sc, spec.variable, value);
    for (Method method : spec.methods) {
      const std::vector<double> amax = method == Method::kPassive ? std::vector<double>{1.0} : a_values;
      for (double a : amax) {
        Scenario s = base;
        if (method != Method::kPassive) s.a_max = a;
        ResultRow row;
        row.experiment = "budget";
        row.variable = to_string(spec.variable);
        row.value = value;
        row.method = to_string(method);
        row.a_max = a;
        row.seed = sc.seed;
        try {
          const BudgetResult r = required_budget(method, s.pd_target, s, opt);
          row.m = r.m_star;
          row.eta = r.eta_star;
          row.pd_predicted = predicted_pd(r.eta_star, s.detector).pd;
          row.required_budget_w = r.required_power;
        } catch (const InfeasibleError&) {
          row.status = RowStatus::kInfeasible;
        } catch (const NumericalError&) {
          row.status = RowStatus::kNumerical;
        }
        rows.push_back(row);
      }
    }
  }
  sort_rows(rows);
  return rows;
}

/// Budget result as an output row.
inline ResultRow budget_row(const Scenario& sc, const BudgetResult& r) {
  ResultRow row;
  row.experiment = "budget";
  row.method = to_string(r.method);
  row.a_max = r.method == Method::kPassive ? 1.0 : sc.a_max;
  row.m = r.m_star;
  row.eta = r.eta_star;
  row.pd_predicted = predicted_pd(r.eta_star, sc.detector).pd;
  row.required_budget_w = r.required_power;
  row.seed = sc.seed;
  return row;
}

}  // namespace rissense
