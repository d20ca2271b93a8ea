#pragma once

// Maximum-eigenvalue detection with pre-whitening, the Tracy-Widom threshold
// and the spiked-model detection-probability predictor.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "common.hpp"
#include "rng.hpp"
#include "tw2_table.hpp"
#include "types.hpp"

namespace rissense {

enum class Hypothesis { kH0, kH1 };

inline void check_dims(const ChannelSet& ch, const CVec& phi, const SourceModel& src) {
  require_dims(phi.size() == ch.G.cols(), "reflecting vector length != number of RIS elements");
  require_dims(static_cast<int>(ch.f.size()) == ch.num_sources(), "f and d must both hold K+1 links");
  require_dims(src.num_sources() == ch.num_sources() && src.zeta.size() == src.p.size(),
               "source model must list K+1 powers and activity probabilities");
  for (int k = 0; k < ch.num_sources(); ++k)
    require_dims(ch.d[k].size() == ch.G.rows() && ch.f[k].size() == ch.G.cols(),
                 "link " + std::to_string(k) + " has inconsistent length");
}

/// h_k = d_k + G diag(phi) f_k.
inline CVec equivalent_channel(const ChannelSet& ch, const CVec& phi, int k) {
  return ch.d[k] + ch.G * phi.cwiseProduct(ch.f[k]);
}

/// Interference-plus-noise covariance seen by the SU:
/// sum_{k>=1} zeta_k p_k h_k h_k^H + sigma2^2 I + sigma1^2 G Phi Phi^H G^H.
inline CMat noise_covariance(const ChannelSet& ch, const Rcm& rcm, const SourceModel& src,
                             const NoiseModel& noise) {
  check_dims(ch, rcm.phi, src);
  const int n = ch.n_antennas();
  CMat r = noise.sigma2_sq * CMat::Identity(n, n);
  for (int k = 1; k < ch.num_sources(); ++k) {
    const CVec h = equivalent_channel(ch, rcm.phi, k);
    r.noalias() += (src.zeta[k] * src.p[k]) * h * h.adjoint();
  }
  const double s1 = rcm.effective_sigma1_sq(noise);
  if (s1 > 0.0) {
    const CMat gp = ch.G * rcm.phi.asDiagonal();
    r.noalias() += s1 * gp * gp.adjoint();
  }
  // Symmetrize away round-off.
  return 0.5 * (r + r.adjoint());
}

/// N x T samples under the requested hypothesis. Interferer activity is drawn
/// once per sensing interval; deterministic in (seed, trial).
inline CMat sample_signals(const ChannelSet& ch, const Rcm& rcm, const SourceModel& src,
                           const NoiseModel& noise, Hypothesis hyp, int n_samples, std::uint64_t seed,
                           std::uint64_t trial = 0) {
  check_dims(ch, rcm.phi, src);
  require(n_samples >= 1, "sample_signals: T must be >= 1");
  GaussianSource rng(make_stream(seed, StreamTag::kSignal, trial));
  const int n = ch.n_antennas();
  const int m = ch.n_elements();

  CMat y = rng.complex_normal(n, n_samples, noise.sigma2_sq);
  for (int k = 0; k < ch.num_sources(); ++k) {
    const bool active = k == 0 ? hyp == Hypothesis::kH1 : rng.bernoulli(src.zeta[k]);
    if (!active || src.p[k] <= 0.0) continue;
    const CVec h = equivalent_channel(ch, rcm.phi, k);
    const CMat s = rng.complex_normal(1, n_samples, src.p[k]);
    y.noalias() += h * s;
  }
  const double s1 = rcm.effective_sigma1_sq(noise);
  if (s1 > 0.0) {
    const CMat nr = rng.complex_normal(m, n_samples, s1);
    y.noalias() += (ch.G * rcm.phi.asDiagonal()) * nr;
  }
  return y;
}

/// Hermitian PSD square root and its inverse, from one eigendecomposition.
struct HermitianRoot {
  CMat sqrt;
  CMat inv_sqrt;
};

inline HermitianRoot hermitian_root(const CMat& r) {
  require_dims(r.rows() == r.cols(), "hermitian_root: matrix must be square");
  Eigen::SelfAdjointEigenSolver<CMat> es(r);
  if (es.info() != Eigen::Success) throw NumericalError("hermitian_root: eigendecomposition failed");
  const RVec& lam = es.eigenvalues();
  const double lmax = lam.maxCoeff();
  const double lmin = lam.minCoeff();
  if (!(lmax > 0.0) || lmin < 1e-12 * lmax)
    throw NumericalError("covariance is not positive definite (lambda_min = " + std::to_string(lmin) +
                         ", lambda_max = " + std::to_string(lmax) + ")");
  const CMat& u = es.eigenvectors();
  HermitianRoot out;
  out.sqrt = u * lam.cwiseSqrt().asDiagonal() * u.adjoint();
  out.inv_sqrt = u * lam.cwiseSqrt().cwiseInverse().asDiagonal() * u.adjoint();
  return out;
}

/// X = Q^{-1} Y with Q = R^{1/2}.
inline CMat whiten(const CMat& y, const CMat& r) {
  require_dims(y.rows() == r.rows(), "whiten: sample dimension does not match covariance");
  return hermitian_root(r).inv_sqrt * y;
}

/// Largest eigenvalue of (1/T) X X^H.
inline double max_eig_statistic(const CMat& x) {
  require(x.cols() >= 1, "max_eig_statistic: T must be >= 1");
  CMat s = CMat::Zero(x.rows(), x.rows());
  s.selfadjointView<Eigen::Lower>().rankUpdate(x, 1.0 / static_cast<double>(x.cols()));
  Eigen::SelfAdjointEigenSolver<CMat> es(s, Eigen::EigenvaluesOnly);
  return std::max(0.0, es.eigenvalues().maxCoeff());
}

namespace detail {

// Monotone (Fritsch-Carlson) cubic Hermite slopes of the tabulated CDF.
inline const std::vector<double>& tw2_slopes() {
  static const std::vector<double> slopes = [] {
    const auto& y = kTw2Cdf;
    const std::size_t n = y.size();
    const double h = kTw2GridStep;
    std::vector<double> delta(n - 1), m(n);
    for (std::size_t i = 0; i + 1 < n; ++i) delta[i] = (y[i + 1] - y[i]) / h;
    m[0] = delta[0];
    m[n - 1] = delta[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i)
      m[i] = (delta[i - 1] * delta[i] <= 0.0) ? 0.0 : 2.0 / (1.0 / delta[i - 1] + 1.0 / delta[i]);
    return m;
  }();
  return slopes;
}

inline double tw2_cell_eval(std::size_t i, double t) {
  const auto& y = kTw2Cdf;
  const auto& m = tw2_slopes();
  const double h = kTw2GridStep;
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * y[i] + (t3 - 2 * t2 + t) * h * m[i] + (-2 * t3 + 3 * t2) * y[i + 1] +
         (t3 - t2) * h * m[i + 1];
}

}  // namespace detail

/// Tracy-Widom (beta = 2) CDF by monotone interpolation of the embedded table.
/// Clamps to 0 / 1 outside the tabulated range.
inline double tw2_cdf(double s) {
  const auto& y = detail::kTw2Cdf;
  const double pos = (s - detail::kTw2GridMin) / detail::kTw2GridStep;
  if (pos <= 0.0) return s < detail::kTw2GridMin ? 0.0 : y.front();
  if (pos >= static_cast<double>(y.size() - 1)) return 1.0;
  const auto i = static_cast<std::size_t>(pos);
  return detail::tw2_cell_eval(i, pos - static_cast<double>(i));
}

/// Inverse of tw2_cdf on the tabulated support.
inline double tw2_quantile(double p) {
  const auto& y = detail::kTw2Cdf;
  if (!(p > y.front() && p < y.back()))
    throw RangeError("tw2_quantile: p = " + std::to_string(p) + " outside tabulated support");
  const auto it = std::upper_bound(y.begin(), y.end(), p);
  const std::size_t i = static_cast<std::size_t>(it - y.begin()) - 1;
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 60; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (detail::tw2_cell_eval(i, mid) < p ? lo : hi) = mid;
  }
  return detail::kTw2GridMin + (static_cast<double>(i) + 0.5 * (lo + hi)) * detail::kTw2GridStep;
}

/// gamma_th = N^{-2/3} (1 + sqrt c)^{4/3} sqrt c F2^{-1}(1 - alpha) + (1 + sqrt c)^2.
inline double detection_threshold(const DetectorConfig& cfg) {
  require(cfg.n_antennas >= 1 && cfg.n_samples >= 1, "detection_threshold: N, T must be >= 1");
  require(cfg.alpha > 0.0 && cfg.alpha < 1.0, "detection_threshold: alpha must lie in (0, 1)");
  const double sc = std::sqrt(cfg.c());
  return std::pow(cfg.n_antennas, -2.0 / 3.0) * std::pow(1.0 + sc, 4.0 / 3.0) * sc *
             tw2_quantile(1.0 - cfg.alpha) +
         (1.0 + sc) * (1.0 + sc);
}

/// eta = p_0 h_0^H R^{-1} h_0, the excess of the largest H1 population eigenvalue.
inline double population_eta(const ChannelSet& ch, const Rcm& rcm, const SourceModel& src,
                             const NoiseModel& noise) {
  const CMat r = noise_covariance(ch, rcm, src, noise);
  const CVec h0 = equivalent_channel(ch, rcm.phi, 0);
  Eigen::LLT<CMat> llt(r);
  if (llt.info() != Eigen::Success) throw NumericalError("population_eta: covariance is singular");
  return std::max(0.0, src.p[0] * h0.dot(llt.solve(h0)).real());
}

struct SpikedStats {
  double eta = 0.0;
  double chi = 0.0;
  double n_samples = 0.0;  // T = N / chi
  double mu_a = std::numeric_limits<double>::quiet_NaN();
  double v_a = std::numeric_limits<double>::quiet_NaN();
  double gamma_th = std::numeric_limits<double>::quiet_NaN();
  bool gaussian_branch = false;  // eta > sqrt(chi)
};

inline SpikedStats spiked_stats(double eta, double chi, int n_antennas,
                                double gamma_th = std::numeric_limits<double>::quiet_NaN()) {
  require(eta >= 0.0 && chi > 0.0 && n_antennas >= 1, "spiked_stats: need eta >= 0, chi > 0, N >= 1");
  SpikedStats s;
  s.eta = eta;
  s.chi = chi;
  s.n_samples = n_antennas / chi;
  s.gamma_th = gamma_th;
  s.gaussian_branch = eta > std::sqrt(chi);
  if (s.gaussian_branch) {
    s.mu_a = eta + 1.0 + chi + chi / eta;
    s.v_a = (eta + 1.0) * (eta + 1.0) / s.n_samples * (1.0 - chi / eta);
  }
  return s;
}

inline SpikedStats spiked_stats(double eta, const DetectorConfig& cfg) {
  return spiked_stats(eta, cfg.c(), cfg.n_antennas, detection_threshold(cfg));
}

inline double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

struct PdPrediction {
  double pd = 0.0;
  bool tracy_widom_branch = false;  // PU undetectable; pd equals the false-alarm level
};

inline PdPrediction predicted_pd(const SpikedStats& s, double alpha) {
  if (!s.gaussian_branch) return {alpha, true};
  return {q_function((s.gamma_th - s.mu_a) / std::sqrt(s.v_a)), false};
}

inline PdPrediction predicted_pd(double eta, const DetectorConfig& cfg) {
  return predicted_pd(spiked_stats(eta, cfg), cfg.alpha);
}

/// Smallest eta whose predicted detection probability reaches pd_target.
/// Returns the branch edge sqrt(chi) (from above) when the Gaussian branch
/// already exceeds the target there.
inline double solve_min_eta(double pd_target, const DetectorConfig& cfg) {
  require(pd_target > 0.0 && pd_target < 1.0, "solve_min_eta: target must lie in (0, 1)");
  if (pd_target <= cfg.alpha)
    throw InfeasibleError("solve_min_eta: target detection probability must exceed the false-alarm level");
  const double gamma = detection_threshold(cfg);
  const double chi = cfg.c();
  auto pd = [&](double eta) {
    return predicted_pd(spiked_stats(eta, chi, cfg.n_antennas, gamma), cfg.alpha).pd;
  };
  double lo = std::sqrt(chi) * (1.0 + 1e-12);
  if (pd(lo) >= pd_target) return lo;
  double hi = std::max(1.0, 2.0 * lo);
  while (pd(hi) < pd_target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) throw NumericalError("solve_min_eta: failed to bracket target");
  }
  while (hi - lo > 1e-13 * hi) {
    const double mid = 0.5 * (lo + hi);
    (pd(mid) < pd_target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace rissense
