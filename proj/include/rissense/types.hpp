#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "common.hpp"

namespace rissense {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

struct Geometry {
  Point2 pu_pos{0.0, 0.0};
  Point2 ris_pos{100.0, 50.0};
  Point2 su_pos{500.0, 0.0};
  std::vector<Point2> interferer_pos;  // length K

  int num_interferers() const { return static_cast<int>(interferer_pos.size()); }
  // Source k = 0 is the PU, k >= 1 the interferers.
  Point2 source(int k) const { return k == 0 ? pu_pos : interferer_pos.at(k - 1); }
};

// Seeded uniform-by-area draw of interferer positions around the RIS.
struct InterfererPlacement {
  double r_min = 50.0;
  double r_max = 60.0;
  std::uint64_t seed = 7;
};

struct PathlossModel {
  double lambda = 0.12;
  double alpha1 = 4.0;  // PU/interferer -> SU
  double alpha2 = 2.0;  // PU/interferer -> RIS
  double alpha3 = 2.0;  // RIS -> SU
};

struct Direction {
  double theta = 0.0;  // azimuth, rad
  double psi = 0.0;    // elevation, rad
};

// Angles for the LoS model. Element spacing is fixed at half a wavelength.
struct AngleSet {
  std::vector<Direction> source_aoa;  // at the RIS, length K+1
  Direction g_aod;                    // RIS -> SU, at the RIS
  double g_aoa = 0.0;                 // RIS -> SU, at the SU
};

struct RisShape {
  int mh = 1;
  int mv = 1;
  int elements() const { return mh * mv; }
};

struct LinkGains {
  std::vector<double> beta_d;  // K+1
  std::vector<double> beta_f;  // K+1
  double beta_g = 0.0;
};

// Steering-vector factors of a LoS channel set: f_k = sqrt(beta_f_k) a_f[k],
// G = sqrt(beta_g) a_g b_g^H.
struct LosFactors {
  std::vector<CVec> a_f;
  CVec a_g;
  CVec b_g;
};

struct ChannelSet {
  std::vector<CVec> d;  // K+1 vectors of length N (index 0 = PU)
  std::vector<CVec> f;  // K+1 vectors of length M
  CMat G;               // N x M
  LinkGains betas;
  std::optional<LosFactors> los;

  int n_antennas() const { return static_cast<int>(G.rows()); }
  int n_elements() const { return static_cast<int>(G.cols()); }
  int num_sources() const { return static_cast<int>(d.size()); }
  int num_interferers() const { return num_sources() - 1; }
};

struct NoiseModel {
  double sigma1_sq = 0.0;  // RIS thermal noise, W
  double sigma2_sq = 1.0;  // SU AWGN, W
};

struct SourceModel {
  std::vector<double> p;     // K+1 transmit powers, W
  std::vector<double> zeta;  // K+1 activity probabilities, zeta[0] == 1

  int num_sources() const { return static_cast<int>(p.size()); }
};

struct DetectorConfig {
  int n_antennas = 32;
  int n_samples = 3200;
  double alpha = 0.1;

  double c() const { return static_cast<double>(n_antennas) / n_samples; }
};

enum class RcmMode { kActive, kPassiveRelaxed, kPassiveUnit };

// Reflecting coefficients phi (diagonal of Phi) with the constraints they
// were produced under.
struct Rcm {
  CVec phi;
  RcmMode mode = RcmMode::kActive;
  double a_max = 1.0;
  double p_out_budget = std::numeric_limits<double>::infinity();  // active only

  int n_elements() const { return static_cast<int>(phi.size()); }
  double effective_sigma1_sq(const NoiseModel& noise) const {
    return mode == RcmMode::kActive ? noise.sigma1_sq : 0.0;
  }
};

struct RisPowerModel {
  double p_c = dbm_to_watts(-10.0);    // per-element circuit power, W
  double p_dc = dbm_to_watts(-5.0);    // per active element DC power, W
  double p_aris = dbm_to_watts(10.0);  // active budget, W
  double p_pris = dbm_to_watts(10.0);  // passive budget, W

  double per_active_element() const { return p_c + p_dc; }
  double p_out_bar(int m) const { return p_aris - m * per_active_element(); }
};

enum class ChannelKind { kLos, kRayleigh };

enum class Method { kMf, kZf, kMmse, kWmmse, kPassive };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::kMf: return "mf";
    case Method::kZf: return "zf";
    case Method::kMmse: return "mmse";
    case Method::kWmmse: return "wmmse";
    case Method::kPassive: return "passive";
  }
  return "?";
}

inline Method parse_method(const std::string& s) {
  if (s == "mf") return Method::kMf;
  if (s == "zf") return Method::kZf;
  if (s == "mmse") return Method::kMmse;
  if (s == "wmmse") return Method::kWmmse;
  if (s == "passive") return Method::kPassive;
  throw ConfigError("unknown method '" + s + "' (expected mf|zf|mmse|wmmse|passive)");
}

// Everything one experiment needs. Powers are stored in Watts.
struct Scenario {
  Geometry geometry;
  std::optional<InterfererPlacement> placement;
  PathlossModel pathloss;
  std::optional<AngleSet> angles;
  RisShape ris;
  std::vector<int> m_sweep;
  SourceModel sources;
  NoiseModel noise;
  RisPowerModel power;
  DetectorConfig detector;
  double a_max = 10.0;
  double pd_target = 0.9;
  int trials = 500;
  std::uint64_t seed = 1;
  Method method = Method::kWmmse;
  ChannelKind channel = ChannelKind::kRayleigh;
  bool direct_links = true;

  int num_interferers() const { return geometry.num_interferers(); }
  int n_elements() const { return ris.elements(); }
};

}  // namespace rissense
