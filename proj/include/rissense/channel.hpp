#pragma once

// Channel synthesis: steering vectors, pathloss, LoS and Rayleigh channel sets.

#include <cmath>
#include <cstdint>

#include "common.hpp"
#include "rng.hpp"
#include "types.hpp"

namespace rissense {

/// Uniform linear array response: element m is exp(-j m phase_arg).
inline CVec steering_vector_ula(int n_elems, double phase_arg) {
  require_dims(n_elems >= 1, "steering_vector_ula: n_elems must be >= 1");
  CVec v(n_elems);
  for (int m = 0; m < n_elems; ++m) v(m) = std::polar(1.0, -m * phase_arg);
  return v;
}

/// Planar array response a_h(theta, psi) kron a_v(theta, psi) at half-wavelength
/// spacing. Element (i, j) of the mh x mv grid sits at index i * mv + j.
inline CVec steering_vector_upa(int mh, int mv, double theta, double psi) {
  require_dims(mh >= 1 && mv >= 1, "steering_vector_upa: dimensions must be >= 1");
  const CVec ah = steering_vector_ula(mh, kPi * std::sin(theta) * std::cos(psi));
  const CVec av = steering_vector_ula(mv, kPi * std::cos(theta) * std::cos(psi));
  CVec out(mh * mv);
  for (int i = 0; i < mh; ++i) out.segment(i * mv, mv) = ah(i) * av;
  return out;
}

/// Free-space style gain lambda^2 / ((4 pi)^2 dist^alpha).
inline double pathloss(double lambda, double dist, double alpha) {
  if (!(dist > 0.0)) throw DomainError("pathloss: distance must be > 0");
  return lambda * lambda / (16.0 * kPi * kPi * std::pow(dist, alpha));
}

inline LinkGains compute_link_gains(const Scenario& sc) {
  const auto& g = sc.geometry;
  const int sources = g.num_interferers() + 1;
  LinkGains out;
  out.beta_d.resize(sources);
  out.beta_f.resize(sources);
  for (int k = 0; k < sources; ++k) {
    out.beta_d[k] = pathloss(sc.pathloss.lambda, distance(g.source(k), g.su_pos), sc.pathloss.alpha1);
    out.beta_f[k] = pathloss(sc.pathloss.lambda, distance(g.source(k), g.ris_pos), sc.pathloss.alpha2);
  }
  out.beta_g = pathloss(sc.pathloss.lambda, distance(g.ris_pos, g.su_pos), sc.pathloss.alpha3);
  return out;
}

/// K positions drawn uniformly (by area) in the annulus r_min <= |p - center| <= r_max.
inline std::vector<Point2> place_interferers(int k, Point2 center, double r_min, double r_max,
                                             std::uint64_t seed) {
  require(k >= 0, "place_interferers: K must be >= 0");
  require(0.0 < r_min && r_min <= r_max, "place_interferers: need 0 < r_min <= r_max");
  GaussianSource src(make_stream(seed, StreamTag::kGeometry));
  std::vector<Point2> out;
  out.reserve(k);
  for (int i = 0; i < k; ++i) {
    const double r = std::sqrt(r_min * r_min + src.uniform() * (r_max * r_max - r_min * r_min));
    const double a = 2.0 * kPi * src.uniform();
    out.push_back({center.x + r * std::cos(a), center.y + r * std::sin(a)});
  }
  return out;
}

// Azimuths follow from the 2D geometry (angle of the arrival direction w.r.t.
// the x axis); elevations are zero.
inline AngleSet derive_angles(const Geometry& g) {
  auto azimuth = [](Point2 from, Point2 to) { return std::atan2(to.y - from.y, to.x - from.x); };
  AngleSet a;
  for (int k = 0; k <= g.num_interferers(); ++k)
    a.source_aoa.push_back({azimuth(g.ris_pos, g.source(k)), 0.0});
  a.g_aod = {azimuth(g.ris_pos, g.su_pos), 0.0};
  a.g_aoa = azimuth(g.su_pos, g.ris_pos);
  return a;
}

/// LoS RIS links and rank-one RIS->SU channel; direct links are zero.
inline ChannelSet build_los_channelset(const Scenario& sc) {
  if (!sc.angles) throw ConfigError("build_los_channelset: scenario has no angle set");
  const AngleSet& ang = *sc.angles;
  const int sources = sc.num_interferers() + 1;
  if (static_cast<int>(ang.source_aoa.size()) != sources)
    throw ConfigError("build_los_channelset: need one arrival direction per source (K+1)");
  const int n = sc.detector.n_antennas;
  const int mh = sc.ris.mh, mv = sc.ris.mv;

  ChannelSet ch;
  ch.betas = compute_link_gains(sc);
  LosFactors los;
  for (int k = 0; k < sources; ++k) {
    los.a_f.push_back(steering_vector_upa(mh, mv, ang.source_aoa[k].theta, ang.source_aoa[k].psi));
    ch.f.push_back(std::sqrt(ch.betas.beta_f[k]) * los.a_f.back());
    ch.d.push_back(CVec::Zero(n));
  }
  los.a_g = steering_vector_ula(n, kPi * std::sin(ang.g_aoa));
  los.b_g = steering_vector_upa(mh, mv, ang.g_aod.theta, ang.g_aod.psi);
  ch.G = std::sqrt(ch.betas.beta_g) * los.a_g * los.b_g.adjoint();
  ch.los = std::move(los);
  return ch;
}

/// Independent Rayleigh draw; entries are CN(0, beta) of their link.
/// Deterministic in (seed, trial).
inline ChannelSet sample_rayleigh_channelset(const Scenario& sc, std::uint64_t seed,
                                             std::uint64_t trial = 0) {
  const int sources = sc.num_interferers() + 1;
  const int n = sc.detector.n_antennas;
  const int m = sc.n_elements();
  require_dims(n >= 1 && m >= 1, "sample_rayleigh_channelset: N and M must be >= 1");
  GaussianSource src(make_stream(seed, StreamTag::kChannel, trial));
  ChannelSet ch;
  ch.betas = compute_link_gains(sc);
  for (int k = 0; k < sources; ++k) {
    CVec d = src.complex_normal(n, 1, ch.betas.beta_d[k]);
    ch.d.push_back(sc.direct_links ? d : CVec::Zero(n));
    ch.f.push_back(src.complex_normal(m, 1, ch.betas.beta_f[k]));
  }
  ch.G = src.complex_normal(n, m, ch.betas.beta_g);
  return ch;
}

inline ChannelSet build_channelset(const Scenario& sc, std::uint64_t seed, std::uint64_t trial = 0) {
  return sc.channel == ChannelKind::kLos ? build_los_channelset(sc)
                                         : sample_rayleigh_channelset(sc, seed, trial);
}

}  // namespace rissense
