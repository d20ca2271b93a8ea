#pragma once

// WMMSE (majorization-minimization) optimization of the reflecting
// coefficients: alternate the MMSE receiver u, the coefficient update and the
// weight omega = 1 / epsilon until omega settles.

#include <cmath>
#include <optional>
#include <vector>

#include "common.hpp"
#include "qcqp.hpp"
#include "sensing.hpp"
#include "types.hpp"

namespace rissense {

/// Weighted MSE epsilon(u, Phi) of the receive filter u.
inline double mse_epsilon(const CVec& u, const Rcm& rcm, const ChannelSet& ch, const SourceModel& src,
                          const NoiseModel& noise) {
  check_dims(ch, rcm.phi, src);
  require_dims(u.size() == ch.G.rows(), "mse_epsilon: u must have N entries");
  double eps = src.p[0] * std::norm(u.dot(equivalent_channel(ch, rcm.phi, 0)) - 1.0);
  for (int k = 1; k < ch.num_sources(); ++k)
    eps += src.zeta[k] * src.p[k] * std::norm(u.dot(equivalent_channel(ch, rcm.phi, k)));
  const double s1 = rcm.effective_sigma1_sq(noise);
  if (s1 > 0.0) eps += s1 * (ch.G.adjoint() * u).cwiseProduct(rcm.phi.conjugate()).squaredNorm();
  eps += noise.sigma2_sq * u.squaredNorm();
  return eps;
}

/// Minimizer of epsilon over u for fixed Phi:
/// u = p_0 (sum_{k>=0} zeta_k p_k h_k h_k^H + sigma1^2 G Phi Phi^H G^H + sigma2^2 I)^{-1} h_0.
inline CVec update_u(const Rcm& rcm, const ChannelSet& ch, const SourceModel& src, const NoiseModel& noise) {
  CMat c = noise_covariance(ch, rcm, src, noise);
  const CVec h0 = equivalent_channel(ch, rcm.phi, 0);
  c.noalias() += src.p[0] * h0 * h0.adjoint();
  Eigen::LLT<CMat> llt(c);
  if (llt.info() != Eigen::Success) throw NumericalError("update_u: receive covariance is singular");
  return src.p[0] * llt.solve(h0);
}

inline double update_omega(double epsilon) {
  if (!(epsilon > 0.0)) throw DomainError("update_omega: epsilon must be > 0");
  return 1.0 / epsilon;
}

/// Per-element output-power weights J_m = sum_k zeta_k p_k |f_{k,m}|^2 + sigma1^2,
/// with a trailing zero for the fixed coordinate.
inline RVec power_weights(const ChannelSet& ch, const SourceModel& src, double sigma1_sq) {
  const int m = ch.n_elements();
  RVec j = RVec::Zero(m + 1);
  for (int k = 0; k < ch.num_sources(); ++k) {
    const double w = (k == 0 ? 1.0 : src.zeta[k]) * src.p[k];
    j.head(m) += w * ch.f[k].cwiseAbs2();
  }
  j.head(m).array() += sigma1_sq;
  return j;
}

/// Output power sum_k zeta_k p_k ||Phi f_k||^2 + sigma1^2 ||Phi 1||^2.
inline double ris_output_power(const Rcm& rcm, const ChannelSet& ch, const SourceModel& src,
                               const NoiseModel& noise) {
  const RVec j = power_weights(ch, src, noise.sigma1_sq);
  return (j.head(rcm.n_elements()).array() * rcm.phi.cwiseAbs2().array()).sum();
}

/// Mode invariants of an Rcm.
inline bool rcm_feasible(const Rcm& rcm, const ChannelSet& ch, const SourceModel& src,
                         const NoiseModel& noise, double tol = 1e-9) {
  switch (rcm.mode) {
    case RcmMode::kActive:
      if ((rcm.phi.cwiseAbs().array() > rcm.a_max * (1.0 + tol)).any()) return false;
      return ris_output_power(rcm, ch, src, noise) <= rcm.p_out_budget * (1.0 + tol);
    case RcmMode::kPassiveRelaxed:
      return !(rcm.phi.cwiseAbs().array() > 1.0 + tol).any();
    case RcmMode::kPassiveUnit:
      return ((rcm.phi.cwiseAbs().array() - 1.0).abs() <= tol).all();
  }
  return false;
}

/// epsilon(u, Phi) as a quadratic in phi with u fixed; `rcm` supplies the
/// mode, caps and budget.
inline QcqpInstance build_p22_instance(const CVec& u, const Rcm& rcm, const ChannelSet& ch,
                                       const SourceModel& src, const NoiseModel& noise) {
  check_dims(ch, rcm.phi, src);
  const int m = ch.n_elements();
  const CVec gu = ch.G.adjoint() * u;  // (u^H G)^H
  const double s1 = rcm.effective_sigma1_sq(noise);

  QcqpInstance inst;
  inst.quad = CMat::Zero(m, m);
  inst.linear = CVec::Zero(m);
  inst.constant = noise.sigma2_sq * u.squaredNorm();
  for (int k = 0; k < ch.num_sources(); ++k) {
    const double w = (k == 0 ? 1.0 : src.zeta[k]) * src.p[k];
    if (w == 0.0) continue;
    const CVec c = ch.f[k].conjugate().cwiseProduct(gu);  // u^H G F_k phi = c^H phi
    const cplx t = u.dot(ch.d[k]) - (k == 0 ? 1.0 : 0.0);
    inst.quad.noalias() += w * c * c.adjoint();
    inst.linear -= w * t * c;
    inst.constant += w * std::norm(t);
  }
  inst.quad.diagonal().array() += s1 * gu.cwiseAbs2().array();
  inst.quad = 0.5 * (inst.quad + inst.quad.adjoint());
  inst.j_diag = power_weights(ch, src, s1);
  if (rcm.mode == RcmMode::kActive) {
    inst.p_out = rcm.p_out_budget;
    inst.a_max = rcm.a_max;
  } else {
    inst.a_max = 1.0;
  }
  return inst;
}

/// Phases of the dominant right singular vector of G diag(f_0), rotated so the
/// cascaded path adds coherently with the direct link. For a rank-one LoS G
/// these are the matched-filter phases arg(b_G(m)) - arg(a_f(m)) up to a
/// common rotation.
inline CVec mf_init_phases(const ChannelSet& ch) {
  const int m = ch.n_elements();
  const CMat c0 = ch.G * ch.f[0].asDiagonal();
  Eigen::JacobiSVD<CMat> svd(c0, Eigen::ComputeThinV);
  CVec v = svd.matrixV().col(0);
  const cplx align = (c0 * v).dot(ch.d[0]);
  if (std::abs(align) > 0.0) v *= align / std::abs(align);
  CVec out(m);
  for (int i = 0; i < m; ++i) out(i) = std::abs(v(i)) > 0.0 ? v(i) / std::abs(v(i)) : cplx{1.0, 0.0};
  return out;
}

/// Matched-filter phases with a common amplitude using 90% of the output budget
/// (capped at a_max).
inline Rcm initial_active_rcm(const ChannelSet& ch, const SourceModel& src, const NoiseModel& noise,
                              double p_out_budget, double a_max) {
  Rcm rcm{mf_init_phases(ch), RcmMode::kActive, a_max, p_out_budget};
  const double jsum = power_weights(ch, src, noise.sigma1_sq).sum();
  const double a = jsum > 0.0 ? std::min(a_max, std::sqrt(0.9 * std::max(p_out_budget, 0.0) / jsum)) : a_max;
  rcm.phi *= a;
  return rcm;
}

struct WmmseOptions {
  double tol = 1e-6;  // on |delta omega| / omega
  int max_iter = 500;
};

struct WmmseResult {
  Rcm rcm;
  double eta = 0.0;
  std::vector<double> objective_trace;  // omega * epsilon - log omega after each iteration
  std::vector<double> omega_trace;
  int iterations = 0;
  bool converged = false;
};

namespace detail {

template <class PhiStep>
WmmseResult run_wmmse(Rcm rcm, const ChannelSet& ch, const SourceModel& src, const NoiseModel& noise,
                      const WmmseOptions& opt, PhiStep&& phi_step) {
  WmmseResult res;
  CVec u = update_u(rcm, ch, src, noise);
  double omega = update_omega(mse_epsilon(u, rcm, ch, src, noise));
  for (int it = 0; it < opt.max_iter; ++it) {
    u = update_u(rcm, ch, src, noise);
    const double eps_old = mse_epsilon(u, rcm, ch, src, noise);
    const QcqpInstance inst = build_p22_instance(u, rcm, ch, src, noise);
    Rcm next = rcm;
    next.phi = phi_step(inst, rcm.phi);
    double eps = mse_epsilon(u, next, ch, src, noise);
    if (eps <= eps_old) {
      rcm = std::move(next);
    } else {
      eps = eps_old;  // keep the incumbent; the coefficient step may not ascend
    }
    const double omega_new = update_omega(eps);
    res.omega_trace.push_back(omega_new);
    res.objective_trace.push_back(omega_new * eps - std::log(omega_new));
    res.iterations = it + 1;
    const double change = std::abs(omega_new - omega) / omega_new;
    omega = omega_new;
    if (change < opt.tol) {
      res.converged = true;
      break;
    }
  }
  res.rcm = std::move(rcm);
  res.eta = population_eta(ch, res.rcm, src, noise);
  return res;
}

}  // namespace detail

/// WMMSE for an active RIS. `init_phi` must satisfy the budget and the
/// per-element cap; by default matched-filter phases are used.
inline WmmseResult wmmse_active(const ChannelSet& ch, const SourceModel& src, const NoiseModel& noise,
                                double p_out_budget, double a_max, std::optional<CVec> init_phi = std::nullopt,
                                WmmseOptions opt = {}) {
  require(a_max > 0.0, "wmmse_active: a_max must be > 0");
  Rcm rcm = initial_active_rcm(ch, src, noise, p_out_budget, a_max);
  if (init_phi) {
    rcm.phi = *init_phi;
    if (!rcm_feasible(rcm, ch, src, noise, 1e-9))
      throw DomainError("wmmse_active: initial coefficients violate the budget or amplitude cap");
  }
  return detail::run_wmmse(std::move(rcm), ch, src, noise, opt,
                           [](const QcqpInstance& inst, const CVec&) { return solve_p22(inst).phi; });
}

/// Passive RIS: relaxed (|phi_m| <= 1) reuses the convex step with sigma1 = 0
/// and no budget; unit-modulus swaps in coordinate descent.
inline WmmseResult wmmse_passive(const ChannelSet& ch, const SourceModel& src, const NoiseModel& noise,
                                 RcmMode mode, std::optional<CVec> init_phi = std::nullopt,
                                 WmmseOptions opt = {}) {
  require(mode != RcmMode::kActive, "wmmse_passive: mode must be passive");
  Rcm rcm{init_phi ? *init_phi : mf_init_phases(ch), mode, 1.0,
          std::numeric_limits<double>::infinity()};
  if (init_phi && !rcm_feasible(rcm, ch, src, noise, 1e-9))
    throw DomainError("wmmse_passive: initial coefficients violate the modulus constraint");
  if (mode == RcmMode::kPassiveRelaxed)
    return detail::run_wmmse(std::move(rcm), ch, src, noise, opt,
                             [](const QcqpInstance& inst, const CVec&) { return solve_p22(inst).phi; });
  return detail::run_wmmse(std::move(rcm), ch, src, noise, opt, [](const QcqpInstance& inst, const CVec& cur) {
    return solve_p22p_unit_modulus(inst, cur).phi;
  });
}

}  // namespace rissense
