#pragma once

// Closed-form analysis for the no-direct-link LoS case and the bisection
// planner for the RIS power budget that reaches a target detection
// probability.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "channel.hpp"
#include "common.hpp"
#include "optimizer.hpp"
#include "sensing.hpp"
#include "types.hpp"

namespace rissense {

// ---------------------------------------------------------------------------
// Interference-free case

/// theta_m = arg(b_G(m)) - arg(a_f(m)).
inline RVec mf_phases(const CVec& b_g, const CVec& a_f) {
  require_dims(b_g.size() == a_f.size(), "mf_phases: vectors must have equal length");
  RVec theta(b_g.size());
  for (Eigen::Index m = 0; m < b_g.size(); ++m) theta(m) = std::arg(b_g(m)) - std::arg(a_f(m));
  return theta;
}

// C0 = N beta_G sigma1^2 / sigma2^2, C1 = P_C + P_DC, C2 = beta_f0 p0 + sigma1^2.
struct NoInterferenceConstants {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

inline NoInterferenceConstants no_interference_constants(int n_antennas, double beta_g, double beta_f0,
                                                         double p0, const NoiseModel& noise,
                                                         const RisPowerModel& power) {
  return {n_antennas * beta_g * noise.sigma1_sq / noise.sigma2_sq, power.per_active_element(),
          beta_f0 * p0 + noise.sigma1_sq};
}

struct AmplitudeChoice {
  double a0 = 0.0;     // unconstrained optimum of A = a^2
  double a_opt = 0.0;  // min(a_max, sqrt(A0))
};

inline AmplitudeChoice optimal_amplitude(const NoInterferenceConstants& k, double p_aris, double a_max) {
  require(k.c1 > 0.0 && k.c2 > 0.0 && p_aris >= 0.0, "optimal_amplitude: need C1, C2 > 0 and P >= 0");
  AmplitudeChoice out;
  out.a0 = k.c1 / std::sqrt(k.c2 * (k.c2 + k.c0 * p_aris));
  out.a_opt = std::min(a_max, std::sqrt(out.a0));
  return out;
}

/// Objective M^2 a^2 / (1 + C0 M a^2) of the interference-free problem.
inline double q_objective(const NoInterferenceConstants& k, double m, double a) {
  return m * m * a * a / (1.0 + k.c0 * m * a * a);
}

/// Amplitude that spends the whole budget on M elements; NaN when M elements
/// alone exceed it.
inline double xi_amplitude(const NoInterferenceConstants& k, double p_aris, double m) {
  const double rest = p_aris - m * k.c1;
  return rest >= 0.0 ? std::sqrt(rest / (m * k.c2)) : std::numeric_limits<double>::quiet_NaN();
}

struct ElementCountChoice {
  double m_real = 0.0;  // full-budget element count
  int m_bar = 0;        // integral count
  double a_bar = 0.0;   // amplitude used with m_bar
};

/// Real-valued optimum M = P / (C1 + C2 a_opt^2) and its integral recovery:
/// compare q at floor(M) (amplitude min{a_max, xi}) against q at floor(M) + 1
/// (amplitude xi, when affordable).
inline ElementCountChoice optimal_m(const NoInterferenceConstants& k, double p_aris, double a_max,
                                    double a_opt) {
  const double denom = k.c1 + k.c2 * a_opt * a_opt;
  require(denom > 0.0, "optimal_m: denominator must be > 0");
  ElementCountChoice out;
  out.m_real = p_aris / denom;
  const long m0 = floor_count(out.m_real);
  if (static_cast<double>(m0) == out.m_real && m0 >= 1) {
    out.m_bar = static_cast<int>(m0);
    out.a_bar = a_opt;
    return out;
  }
  std::optional<std::pair<int, double>> low, high;
  if (m0 >= 1) low = std::pair{static_cast<int>(m0), std::min(a_max, xi_amplitude(k, p_aris, m0))};
  const double xi_hi = xi_amplitude(k, p_aris, m0 + 1);
  if (std::isfinite(xi_hi) && xi_hi > 0.0) high = std::pair{static_cast<int>(m0 + 1), std::min(a_max, xi_hi)};
  if (!low && !high) return out;  // budget cannot power a single element
  if (low && high && !(q_objective(k, high->first, high->second) > q_objective(k, low->first, low->second)))
    high.reset();
  const auto& pick = high ? *high : *low;
  out.m_bar = pick.first;
  out.a_bar = pick.second;
  return out;
}

/// eta with matched-filter phases, common amplitude a and no interferers:
/// a^2 M^2 N beta_f0 beta_G p0 / (M N sigma1^2 a^2 beta_G + sigma2^2).
inline double eta_active_no_interference(int n_antennas, double m, double a, double beta_f0, double beta_g,
                                         double p0, const NoiseModel& noise) {
  const double a2 = a * a;
  return a2 * m * m * n_antennas * beta_f0 * beta_g * p0 /
         (m * n_antennas * noise.sigma1_sq * a2 * beta_g + noise.sigma2_sq);
}

/// Number of passive elements a budget supports.
inline int passive_elements(double p_pris, double p_c) {
  require(p_c > 0.0, "passive_elements: P_C must be > 0");
  return static_cast<int>(floor_count(std::max(p_pris, 0.0) / p_c));
}

/// N M^2 beta_f0 beta_G p0 / sigma2^2.
inline double eta_passive(int n_antennas, double m, double beta_f0, double beta_g, double p0, double sigma2_sq) {
  return n_antennas * m * m * beta_f0 * beta_g * p0 / sigma2_sq;
}

/// Same quantity written through the budget P_PRIS = M P_C.
inline double eta_passive_from_budget(int n_antennas, double p_pris, double p_c, double beta_f0, double beta_g,
                                      double p0, double sigma2_sq) {
  return n_antennas * p_pris * p_pris * beta_f0 * beta_g * p0 / (p_c * p_c * sigma2_sq);
}

/// Smallest element count whose passive eta reaches eta_target.
inline int passive_elements_for_eta(double eta_target, int n_antennas, double beta_f0, double beta_g, double p0,
                                    double sigma2_sq) {
  const double m = std::sqrt(eta_target * sigma2_sq / (n_antennas * beta_f0 * beta_g * p0));
  return static_cast<int>(std::ceil(m * (1.0 - 1e-12)));
}

/// floor(P_ARIS / (P_C + P_DC)).
inline int m_max(double p_aris, double p_c, double p_dc) {
  require(p_c + p_dc > 0.0, "m_max: P_C + P_DC must be > 0");
  return static_cast<int>(floor_count(std::max(p_aris, 0.0) / (p_c + p_dc)));
}

// ---------------------------------------------------------------------------
// Interference-aware closed forms (MF / ZF / MMSE). Vectors below live in the
// coordinates of the channel set: phi is the diagonal of Phi. The closed-form
// derivation works with conj(phi); the conversion happens here.

struct ClosedFormContext {
  int n_antennas = 0;
  int m = 0;
  double beta_g = 0.0;
  double beta_f0 = 0.0;
  double p0 = 0.0;
  NoiseModel noise;
  NoInterferenceConstants k;
  CVec a_f;               // PU steering at the RIS
  CVec b_g;               // RIS side steering of G
  CMat q;                 // columns q_k = B^H f_k, k = 0..K
  CMat d;                 // (sigma1^2 I + sum_{k>=1} zeta_k p_k f_k f_k^H) / sigma2^2
  double p_in_bar = 0.0;  // sum_k zeta_k beta_fk p_k + sigma1^2
};

inline ClosedFormContext make_context(const ChannelSet& ch, const SourceModel& src, const NoiseModel& noise,
                                      const RisPowerModel& power) {
  if (!ch.los) throw ConfigError("closed-form analysis needs a LoS channel set");
  ClosedFormContext ctx;
  ctx.n_antennas = ch.n_antennas();
  ctx.m = ch.n_elements();
  ctx.beta_g = ch.betas.beta_g;
  ctx.beta_f0 = ch.betas.beta_f[0];
  ctx.p0 = src.p[0];
  ctx.noise = noise;
  ctx.k = no_interference_constants(ctx.n_antennas, ctx.beta_g, ctx.beta_f0, ctx.p0, noise, power);
  ctx.a_f = ch.los->a_f[0];
  ctx.b_g = ch.los->b_g;
  const int sources = ch.num_sources();
  ctx.q.resize(ctx.m, sources);
  ctx.d = (noise.sigma1_sq / noise.sigma2_sq) * CMat::Identity(ctx.m, ctx.m);
  ctx.p_in_bar = noise.sigma1_sq;
  for (int k = 0; k < sources; ++k) {
    ctx.q.col(k) = ch.los->b_g.conjugate().cwiseProduct(ch.f[k]);
    const double w = (k == 0 ? 1.0 : src.zeta[k]) * src.p[k];
    ctx.p_in_bar += w * ch.betas.beta_f[k];
    if (k >= 1) ctx.d.noalias() += (w / noise.sigma2_sq) * ch.f[k] * ch.f[k].adjoint();
  }
  return ctx;
}

/// min{P_out / P_in, M a_max^2}: the norm budget once the per-element cap is
/// relaxed to a norm cap.
inline double rho_cap(const ClosedFormContext& ctx, double p_out_bar, double a_max) {
  return std::min(std::max(p_out_bar, 0.0) / ctx.p_in_bar, ctx.m * a_max * a_max);
}

struct ClosedFormConfig {
  CVec phi;
  double eta = 0.0;
  double rho = 0.0;                // ||phi||^2
  double max_amplitude = 0.0;      // max_m |phi_m|
};

struct MmseConfig : ClosedFormConfig {
  CVec phi_unnormalized;           // the inverse applied to B^H f_0, before scaling
  double unnormalized_norm_sq = 0.0;
  double eta_unnormalized = 0.0;   // rational objective evaluated at phi_unnormalized
};

/// Rational objective N beta_G |b_G^H Phi f_0|^2 / (1 + N beta_G b_G^H Phi D Phi^H b_G) scaled by p0 / sigma2^2.
inline double rational_eta(const ClosedFormContext& ctx, const CVec& phi) {
  const double c = ctx.n_antennas * ctx.beta_g;
  const CVec psi = phi.conjugate();
  const CVec bpsi = ctx.b_g.cwiseProduct(psi);  // B psi
  const double num = std::norm(ctx.q.col(0).dot(psi));
  const double den = 1.0 + c * (bpsi.dot(ctx.d * bpsi)).real();
  return ctx.p0 / ctx.noise.sigma2_sq * c * num / den;
}

inline MmseConfig mmse_phi(const ClosedFormContext& ctx, double rho1) {
  require(rho1 > 0.0, "mmse_phi: rho must be > 0");
  const double c = ctx.n_antennas * ctx.beta_g;
  const CMat bdb = ctx.b_g.conjugate().asDiagonal() * ctx.d * ctx.b_g.asDiagonal();
  CMat lhs = c * bdb;
  lhs.diagonal().array() += 1.0 / rho1;
  Eigen::LLT<CMat> llt(lhs);
  if (llt.info() != Eigen::Success) throw NumericalError("mmse_phi: system is not positive definite");
  const CVec psi = llt.solve(ctx.q.col(0));
  MmseConfig out;
  out.eta = ctx.p0 / ctx.noise.sigma2_sq * c * ctx.q.col(0).dot(psi).real();
  out.phi_unnormalized = psi.conjugate();
  out.unnormalized_norm_sq = psi.squaredNorm();
  out.eta_unnormalized = rational_eta(ctx, out.phi_unnormalized);
  out.phi = std::sqrt(rho1) * out.phi_unnormalized / std::sqrt(out.unnormalized_norm_sq);
  out.rho = rho1;
  out.max_amplitude = out.phi.cwiseAbs().maxCoeff();
  return out;
}

struct ZfConfig : ClosedFormConfig {
  double eta_projection_form = 0.0;  // second expression, via the projector off span(q_1..q_K)
  CVec w;                            // first column of Q (Q^H Q)^{-1}
};

inline ZfConfig zf_phi(const ClosedFormContext& ctx, double a_max, double p_out_bar) {
  const int sources = static_cast<int>(ctx.q.cols());
  if (ctx.m < sources) throw DimensionError("zf_phi: zero-forcing needs M >= K + 1");
  const CMat gram = ctx.q.adjoint() * ctx.q;
  Eigen::FullPivLU<CMat> lu(gram);
  if (lu.rank() < sources || lu.rcond() < 1e-13)
    throw NumericalError("zf_phi: Q^H Q is singular (degenerate geometry)");
  const CMat inv = lu.inverse();
  ZfConfig out;
  out.w = ctx.q * inv.col(0);
  const double wn2 = out.w.squaredNorm();
  const double winf = out.w.cwiseAbs().maxCoeff();
  out.rho = std::min(std::max(p_out_bar, 0.0) / ctx.p_in_bar, a_max * a_max * wn2 / (winf * winf));
  out.phi = (std::sqrt(out.rho) * out.w / std::sqrt(wn2)).conjugate();
  out.max_amplitude = out.phi.cwiseAbs().maxCoeff();
  const double c = ctx.n_antennas * ctx.beta_g;
  const double s1 = ctx.noise.sigma1_sq, s2 = ctx.noise.sigma2_sq;
  out.eta = c * ctx.p0 / ((s2 / out.rho + c * s1) * inv(0, 0).real());
  double proj;
  if (sources == 1) {
    proj = ctx.q.col(0).squaredNorm();
  } else {
    const CMat qbar = ctx.q.rightCols(sources - 1);
    const CVec coef = (qbar.adjoint() * qbar).ldlt().solve(qbar.adjoint() * ctx.q.col(0));
    proj = (ctx.q.col(0).squaredNorm() - ctx.q.col(0).dot(qbar * coef)).real();
  }
  out.eta_projection_form = c * out.rho * ctx.p0 / (s2 + c * out.rho * s1) * proj;
  return out;
}

struct MfConfig : ClosedFormConfig {
  double a = 0.0;
};

/// phi = a B^H a_f (in the conj coordinates), a = min{a_max, sqrt(P_out / (M P_in))}.
inline MfConfig mf_phi(const ClosedFormContext& ctx, double a_max, double p_out_bar) {
  MfConfig out;
  out.a = std::min(a_max, std::sqrt(std::max(p_out_bar, 0.0) / (ctx.m * ctx.p_in_bar)));
  out.phi = (out.a * ctx.b_g.conjugate().cwiseProduct(ctx.a_f)).conjugate();
  out.rho = out.phi.squaredNorm();
  out.max_amplitude = out.a;
  const double c = ctx.n_antennas * ctx.beta_g;
  const double afda = (ctx.a_f.dot(ctx.d * ctx.a_f)).real();
  out.eta = c * ctx.m * ctx.m * out.a * out.a * ctx.beta_f0 * ctx.p0 /
            ((1.0 + c * out.a * out.a * afda) * ctx.noise.sigma2_sq);
  return out;
}

// ---------------------------------------------------------------------------
// Element-count scan. For a LoS array the per-M quantities of the closed forms
// only need the Gram matrix F^H F of the RIS links (|b_G(m)| = 1), which grows
// by a rank-one term per element. Element ordering follows the UPA index
// i * mv + j, so prefixes of whole rows are again valid arrays.

class LosElementScan {
 public:
  LosElementScan(const Scenario& sc) : sc_(sc) {
    if (!sc.angles) throw ConfigError("budget planning needs RIS-side angles (LoS model)");
    gains_ = compute_link_gains(sc);
    sources_ = sc.num_interferers() + 1;
    mv_ = sc.ris.mv;
    for (int k = 0; k < sources_; ++k) {
      const auto& dir = sc.angles->source_aoa.at(k);
      ph_h_.push_back(kPi * std::sin(dir.theta) * std::cos(dir.psi));
      ph_v_.push_back(kPi * std::cos(dir.theta) * std::cos(dir.psi));
    }
    reset();
  }

  void reset() {
    gram_ = CMat::Zero(sources_, sources_);
    m_ = 0;
  }

  int elements() const { return m_; }
  const CMat& gram() const { return gram_; }
  const LinkGains& gains() const { return gains_; }

  // Appends one full row of mv elements.
  void grow() {
    const int i = m_ / mv_;
    CVec row(sources_);
    for (int j = 0; j < mv_; ++j) {
      for (int k = 0; k < sources_; ++k)
        row(k) = std::sqrt(gains_.beta_f[k]) * std::polar(1.0, -(i * ph_h_[k] + j * ph_v_[k]));
      gram_.noalias() += row.conjugate() * row.transpose();
    }
    m_ += mv_;
  }

  // max_m |sum_k f_{k,m} g_k| over the current prefix.
  double weighted_inf_norm(const CVec& g) const {
    double best = 0.0;
    for (int m = 0; m < m_; ++m) {
      const int i = m / mv_, j = m % mv_;
      cplx s = 0.0;
      for (int k = 0; k < sources_; ++k)
        s += g(k) * std::sqrt(gains_.beta_f[k]) * std::polar(1.0, -(i * ph_h_[k] + j * ph_v_[k]));
      best = std::max(best, std::abs(s));
    }
    return best;
  }

 private:
  const Scenario& sc_;
  LinkGains gains_;
  int sources_ = 1;
  int mv_ = 1;
  std::vector<double> ph_h_, ph_v_;
  CMat gram_;
  int m_ = 0;
};

struct ScanInputs {
  int n_antennas;
  double beta_g;
  double p0;
  NoiseModel noise;
  std::vector<double> interferer_weight;  // zeta_k p_k, k >= 1
  double p_in_bar;
};

inline ScanInputs scan_inputs(const Scenario& sc, const LinkGains& g, bool passive) {
  ScanInputs in;
  in.n_antennas = sc.detector.n_antennas;
  in.beta_g = g.beta_g;
  in.p0 = sc.sources.p[0];
  in.noise = sc.noise;
  if (passive) in.noise.sigma1_sq = 0.0;
  in.p_in_bar = in.noise.sigma1_sq + sc.sources.p[0] * g.beta_f[0];
  for (int k = 1; k <= sc.num_interferers(); ++k) {
    in.interferer_weight.push_back(sc.sources.zeta[k] * sc.sources.p[k]);
    in.p_in_bar += in.interferer_weight.back() * g.beta_f[k];
  }
  return in;
}

// eta of each closed form from the Gram matrix of the current prefix.
inline double gram_eta_mf(const ScanInputs& in, const CMat& gram, int m, double a) {
  const double c = in.n_antennas * in.beta_g;
  const double beta_f0 = gram(0, 0).real() / m;
  double afda = in.noise.sigma1_sq * m;
  for (std::size_t k = 0; k < in.interferer_weight.size(); ++k)
    afda += in.interferer_weight[k] * std::norm(gram(0, k + 1)) / beta_f0;
  afda /= in.noise.sigma2_sq;
  return c * m * m * a * a * beta_f0 * in.p0 / ((1.0 + c * a * a * afda) * in.noise.sigma2_sq);
}

inline double gram_eta_mmse(const ScanInputs& in, const CMat& gram, double rho) {
  const double c = in.n_antennas * in.beta_g;
  const double alpha = 1.0 / rho + c * in.noise.sigma1_sq / in.noise.sigma2_sq;
  const int kk = static_cast<int>(in.interferer_weight.size());
  double quad = gram(0, 0).real();
  if (kk > 0) {
    RVec s(kk);
    for (int k = 0; k < kk; ++k) s(k) = std::sqrt(c * in.interferer_weight[k] / in.noise.sigma2_sq);
    const CVec v = s.asDiagonal() * gram.col(0).tail(kk);
    CMat small = s.asDiagonal() * gram.bottomRightCorner(kk, kk) * s.asDiagonal();
    small.diagonal().array() += alpha;
    quad -= v.dot(small.ldlt().solve(v)).real();
  }
  return in.p0 / in.noise.sigma2_sq * c * quad / alpha;
}

// ---------------------------------------------------------------------------
// Bisection planner

struct BudgetOptions {
  double p_low = 0.0;
  double p_high = 10.0;   // W
  double stop_tol = 1e-6;  // W
  int wmmse_max_iter = 200;
  double wmmse_tol = 1e-6;
  bool warm_start = true;  // reuse the last WMMSE solution per element count
};

struct BudgetResult {
  Method method = Method::kMf;
  double required_power = 0.0;  // W
  int m_star = 0;
  Rcm phi_star;
  double eta_star = 0.0;
  double eta_target = 0.0;
  int probes = 0;
  bool monotone = true;  // eta* never decreased along increasing probe budgets
};

namespace detail {

struct ProbeOutcome {
  bool reached = false;
  double eta_best = 0.0;  // full maximum when !reached (or when exhaustive)
  int m_best = 0;
  std::optional<Rcm> rcm_best;
};

class BudgetPlanner {
 public:
  BudgetPlanner(Method method, const Scenario& sc, const BudgetOptions& opt)
      : method_(method), sc_(sc), opt_(opt), scan_(sc) {
    inputs_ = scan_inputs(sc, scan_.gains(), method == Method::kPassive);
  }

  // Scan element counts at budget p. With `exhaustive` false the scan stops
  // at the first count whose eta exceeds eta0.
  ProbeOutcome probe(double p, double eta0, bool exhaustive) {
    ProbeOutcome out;
    scan_.reset();
    const bool passive = method_ == Method::kPassive;
    const double per_elem = passive ? sc_.power.p_c : sc_.power.per_active_element();
    const long mcap = floor_count(std::max(p, 0.0) / per_elem);
    const int mv = sc_.ris.mv;
    const int sources = sc_.num_interferers() + 1;
    std::vector<std::pair<double, int>> wmmse_candidates;
    while (scan_.elements() + mv <= mcap) {
      scan_.grow();
      const int m = scan_.elements();
      const CMat& gram = scan_.gram();
      const double p_out = p - m * per_elem;
      double eta = 0.0;
      switch (method_) {
        case Method::kPassive:
          eta = gram_eta_mf(inputs_, gram, m, 1.0);
          break;
        case Method::kMf: {
          const double a = std::min(sc_.a_max, std::sqrt(std::max(p_out, 0.0) / (m * inputs_.p_in_bar)));
          eta = gram_eta_mf(inputs_, gram, m, a);
          break;
        }
        case Method::kMmse:
          eta = gram_eta_mmse(inputs_, gram, rho_of(p_out, m));
          break;
        case Method::kZf: {
          if (m < sources) continue;
          Eigen::FullPivLU<CMat> lu(gram);
          if (lu.rank() < sources || lu.rcond() < 1e-13) continue;
          const CVec g = lu.solve(CVec::Unit(sources, 0));
          const double wn2 = g(0).real();
          double rho = std::max(p_out, 0.0) / inputs_.p_in_bar;
          if (rho > sc_.a_max * sc_.a_max) {
            const double winf = scan_.weighted_inf_norm(g);
            rho = std::min(rho, sc_.a_max * sc_.a_max * wn2 / (winf * winf));
          }
          const double c = inputs_.n_antennas * inputs_.beta_g;
          eta = rho > 0.0 ? c * inputs_.p0 / ((inputs_.noise.sigma2_sq / rho + c * inputs_.noise.sigma1_sq) * wn2)
                          : 0.0;
          break;
        }
        case Method::kWmmse: {
          const double bound = gram_eta_mmse(inputs_, gram, rho_of(p_out, m));
          if (bound > eta0 || exhaustive) wmmse_candidates.emplace_back(bound, m);
          continue;
        }
      }
      if (eta > out.eta_best) {
        out.eta_best = eta;
        out.m_best = m;
      }
      if (eta > eta0) {
        out.reached = true;
        if (!exhaustive) return out;
      }
    }
    if (method_ == Method::kWmmse) run_wmmse_candidates(p, eta0, exhaustive, wmmse_candidates, out);
    return out;
  }

  Rcm realize(double p, int m) {
    Scenario sc = sc_;
    sc.ris.mh = m / sc.ris.mv;
    const ChannelSet ch = build_los_channelset(sc);
    const ClosedFormContext ctx = make_context(ch, sc.sources, sc.noise, sc.power);
    const double per_elem = method_ == Method::kPassive ? sc.power.p_c : sc.power.per_active_element();
    const double p_out = p - m * per_elem;
    switch (method_) {
      case Method::kMf: return {mf_phi(ctx, sc.a_max, p_out).phi, RcmMode::kActive, sc.a_max, p_out};
      case Method::kZf: return {zf_phi(ctx, sc.a_max, p_out).phi, RcmMode::kActive, sc.a_max, p_out};
      case Method::kMmse:
        return {mmse_phi(ctx, rho_cap(ctx, p_out, sc.a_max)).phi, RcmMode::kActive, sc.a_max, p_out};
      case Method::kPassive: {
        Rcm r{CVec(m), RcmMode::kPassiveUnit, 1.0, std::numeric_limits<double>::infinity()};
        const RVec th = mf_phases(ctx.b_g, ctx.a_f);
        for (int i = 0; i < m; ++i) r.phi(i) = std::polar(1.0, th(i));
        return r;
      }
      case Method::kWmmse: break;
    }
    throw ConfigError("realize: no closed form for WMMSE");
  }

 private:
  double rho_of(double p_out, int m) const {
    return std::min(std::max(p_out, 0.0) / inputs_.p_in_bar, m * sc_.a_max * sc_.a_max);
  }

  void run_wmmse_candidates(double p, double eta0, bool exhaustive, std::vector<std::pair<double, int>>& cand,
                            ProbeOutcome& out) {
    // Ascending M for the feasibility test; descending bound with pruning for
    // the exhaustive maximum.
    if (exhaustive)
      std::sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [bound, m] : cand) {
      if (exhaustive && bound <= out.eta_best) break;
      const double p_out = p - m * sc_.power.per_active_element();
      if (p_out <= 0.0) continue;
      Scenario sc = sc_;
      sc.ris.mh = m / sc.ris.mv;
      const ChannelSet ch = build_los_channelset(sc);
      std::optional<CVec> init;
      if (auto it = warm_.find(m); opt_.warm_start && it != warm_.end()) {
        Rcm r{it->second, RcmMode::kActive, sc.a_max, p_out};
        const double pw = ris_output_power(r, ch, sc.sources, sc.noise);
        if (pw > 0.9 * p_out) r.phi *= std::sqrt(0.9 * p_out / pw);
        init = r.phi;
      }
      const WmmseResult res = wmmse_active(ch, sc.sources, sc.noise, p_out, sc.a_max, init,
                                           {opt_.wmmse_tol, opt_.wmmse_max_iter});
      warm_[m] = res.rcm.phi;
      if (res.eta > out.eta_best) {
        out.eta_best = res.eta;
        out.m_best = m;
        out.rcm_best = res.rcm;
      }
      if (res.eta > eta0) {
        out.reached = true;
        if (!exhaustive) return;
      }
    }
  }

  Method method_;
  const Scenario& sc_;
  BudgetOptions opt_;
  LosElementScan scan_;
  ScanInputs inputs_;
  std::map<int, CVec> warm_;
};

}  // namespace detail

/// Bisection on the RIS budget until |P_high - P_low| <= stop_tol.
/// Throws InfeasibleError when P_high itself misses the target.
inline BudgetResult required_budget(Method method, double pd_target, const Scenario& sc,
                                    const BudgetOptions& opt = {}) {
  require(opt.p_high > opt.p_low && opt.stop_tol > 0.0, "required_budget: need P_high > P_low and stop_tol > 0");
  BudgetResult res;
  res.method = method;
  res.eta_target = solve_min_eta(pd_target, sc.detector);
  detail::BudgetPlanner planner(method, sc, opt);

  std::vector<std::pair<double, double>> infeasible_probes;  // (P, eta*)
  double hi = opt.p_high, lo = opt.p_low;
  detail::ProbeOutcome top = planner.probe(hi, res.eta_target, false);
  ++res.probes;
  if (!top.reached)
    throw InfeasibleError("required_budget(" + to_string(method) + "): target eta " +
                          std::to_string(res.eta_target) + " not reached at P_high = " + std::to_string(hi) +
                          " W (best eta " + std::to_string(top.eta_best) + ")");
  while (hi - lo > opt.stop_tol) {
    const double mid = 0.5 * (hi + lo);
    const detail::ProbeOutcome o = planner.probe(mid, res.eta_target, false);
    ++res.probes;
    if (o.reached) {
      hi = mid;
    } else {
      for (const auto& [p, e] : infeasible_probes)
        if (p < mid && e > o.eta_best * (1.0 + 1e-9)) res.monotone = false;
      infeasible_probes.emplace_back(mid, o.eta_best);
      lo = mid;
    }
  }
  res.required_power = hi;
  const detail::ProbeOutcome fin = planner.probe(hi, res.eta_target, true);
  res.eta_star = fin.eta_best;
  res.m_star = fin.m_best;
  res.phi_star = fin.rcm_best ? *fin.rcm_best : planner.realize(hi, fin.m_best);
  return res;
}

}  // namespace rissense
