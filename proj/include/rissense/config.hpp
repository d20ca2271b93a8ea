#pragma once

// Scenario files are JSON objects with nested sections. Powers are given in
// dBm and converted to Watts on load. See README for the schema.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "channel.hpp"
#include "common.hpp"
#include "types.hpp"

namespace rissense {

enum class SweepVariable { kT, kZeta, kP, kK };

inline std::string to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::kT: return "T";
    case SweepVariable::kZeta: return "zeta";
    case SweepVariable::kP: return "p";
    case SweepVariable::kK: return "K";
  }
  return "?";
}

struct SweepSpec {
  SweepVariable variable = SweepVariable::kT;
  std::vector<double> values;
  std::vector<Method> methods{Method::kMf, Method::kZf, Method::kMmse, Method::kWmmse, Method::kPassive};
  std::vector<double> a_max_values;  // empty: the scenario's a_max
};

struct ScenarioFile {
  Scenario scenario;
  std::optional<SweepSpec> sweep;
};

namespace detail {

using nlohmann::json;

class FieldReader {
 public:
  explicit FieldReader(std::vector<std::string>& errors) : errors_(errors) {}

  template <typename T>
  void get(const json& obj, const std::string& section, const char* key, T& out) {
    if (!obj.contains(key)) return;
    try {
      out = obj.at(key).get<T>();
    } catch (const json::exception&) {
      errors_.push_back("field '" + path(section, key) + "': wrong type (" + obj.at(key).dump() + ")");
    }
  }

  // Scalar or array of length n.
  void get_per_source(const json& obj, const std::string& section, const char* key, int n,
                      std::vector<double>& out) {
    if (!obj.contains(key)) return;
    const json& v = obj.at(key);
    if (v.is_number()) {
      out.assign(n, v.get<double>());
    } else if (v.is_array() && static_cast<int>(v.size()) == n && std::all_of(v.begin(), v.end(), [](const json& e) {
                 return e.is_number();
               })) {
      out = v.get<std::vector<double>>();
    } else {
      errors_.push_back("field '" + path(section, key) + "': expected a number or an array of " +
                        std::to_string(n) + " numbers");
    }
  }

  void point(const json& obj, const std::string& section, const char* key, Point2& out) {
    if (!obj.contains(key)) return;
    const json& v = obj.at(key);
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
      out = {v[0].get<double>(), v[1].get<double>()};
    else
      errors_.push_back("field '" + path(section, key) + "': expected [x, y]");
  }

  void error(const std::string& msg) { errors_.push_back(msg); }

  static std::string path(const std::string& section, const char* key) {
    return section.empty() ? std::string(key) : section + "." + key;
  }

 private:
  std::vector<std::string>& errors_;
};

inline const json& section(const json& root, const char* key, FieldReader& rd) {
  static const json empty = json::object();
  if (!root.contains(key)) return empty;
  if (!root.at(key).is_object()) {
    rd.error(std::string("section '") + key + "': expected an object");
    return empty;
  }
  return root.at(key);
}

inline void check_known(const json& obj, const std::string& where, std::initializer_list<const char*> keys,
                        FieldReader& rd) {
  for (const auto& [k, v] : obj.items()) {
    (void)v;
    if (std::find_if(keys.begin(), keys.end(), [&](const char* s) { return k == s; }) == keys.end())
      rd.error("unknown field '" + (where.empty() ? k : where + "." + k) + "'");
  }
}

inline std::string line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace detail

/// Parses and validates a scenario document. All problems are collected and
/// reported together in one ConfigError.
inline ScenarioFile parse_scenario(const std::string& text, const std::string& origin = "<string>") {
  using detail::json;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(origin + ": parse error at " + detail::line_col(text, e.byte > 0 ? e.byte - 1 : 0) + ": " +
                      e.what());
  }
  if (!root.is_object()) throw ConfigError(origin + ": top level must be an object");

  std::vector<std::string> errors;
  detail::FieldReader rd(errors);
  ScenarioFile file;
  Scenario& sc = file.scenario;

  detail::check_known(root,  "", {"geometry", "pathloss", "detector", "ris", "sources", "noise", "power", "a_max",
                                 "pd_target", "trials", "seed", "method", "channel", "direct_links", "sweep",
                                 "description"}, rd);

  const json& geo = detail::section(root, "geometry", rd);
  detail::check_known(geo, "geometry", {"pu", "ris", "su", "interferers"}, rd);
  rd.point(geo, "geometry", "pu", sc.geometry.pu_pos);
  rd.point(geo, "geometry", "ris", sc.geometry.ris_pos);
  rd.point(geo, "geometry", "su", sc.geometry.su_pos);
  int k_count = 0;
  if (geo.contains("interferers")) {
    const json& itf = geo.at("interferers");
    if (itf.is_array()) {
      for (std::size_t i = 0; i < itf.size(); ++i) {
        Point2 p;
        const json wrap = {{"p", itf[i]}};
        rd.point(wrap, "geometry.interferers[" + std::to_string(i) + "]", "p", p);
        sc.geometry.interferer_pos.push_back(p);
      }
      k_count = static_cast<int>(itf.size());
    } else if (itf.is_object()) {
      detail::check_known(itf, "geometry.interferers", {"count", "r_min", "r_max", "seed"}, rd);
      InterfererPlacement pl;
      rd.get(itf, "geometry.interferers", "count", k_count);
      rd.get(itf, "geometry.interferers", "r_min", pl.r_min);
      rd.get(itf, "geometry.interferers", "r_max", pl.r_max);
      rd.get(itf, "geometry.interferers", "seed", pl.seed);
      if (k_count < 0) rd.error("field 'geometry.interferers.count': must be >= 0");
      if (!(pl.r_min > 0.0 && pl.r_min <= pl.r_max))
        rd.error("field 'geometry.interferers': need 0 < r_min <= r_max");
      sc.placement = pl;
      if (k_count >= 0 && pl.r_min > 0.0 && pl.r_min <= pl.r_max)
        sc.geometry.interferer_pos = place_interferers(k_count, sc.geometry.ris_pos, pl.r_min, pl.r_max, pl.seed);
    } else {
      rd.error("field 'geometry.interferers': expected a list of [x, y] or {count, r_min, r_max, seed}");
    }
  }
  const int sources = static_cast<int>(sc.geometry.interferer_pos.size()) + 1;

  const json& pl = detail::section(root, "pathloss", rd);
  detail::check_known(pl, "pathloss", {"lambda", "alpha1", "alpha2", "alpha3"}, rd);
  rd.get(pl, "pathloss", "lambda", sc.pathloss.lambda);
  rd.get(pl, "pathloss", "alpha1", sc.pathloss.alpha1);
  rd.get(pl, "pathloss", "alpha2", sc.pathloss.alpha2);
  rd.get(pl, "pathloss", "alpha3", sc.pathloss.alpha3);

  const json& det = detail::section(root, "detector", rd);
  detail::check_known(det, "detector", {"n_antennas", "n_samples", "alpha"}, rd);
  rd.get(det, "detector", "n_antennas", sc.detector.n_antennas);
  rd.get(det, "detector", "n_samples", sc.detector.n_samples);
  rd.get(det, "detector", "alpha", sc.detector.alpha);

  const json& ris = detail::section(root, "ris", rd);
  detail::check_known(ris, "ris", {"mh", "mv", "m_sweep"}, rd);
  rd.get(ris, "ris", "mh", sc.ris.mh);
  rd.get(ris, "ris", "mv", sc.ris.mv);
  rd.get(ris, "ris", "m_sweep", sc.m_sweep);

  const json& srcs = detail::section(root, "sources", rd);
  detail::check_known(srcs, "sources", {"p_dbm", "zeta"}, rd);
  std::vector<double> p_dbm(sources, 30.0);
  sc.sources.zeta.assign(sources, 1.0);
  rd.get_per_source(srcs, "sources", "p_dbm", sources, p_dbm);
  rd.get_per_source(srcs, "sources", "zeta", sources, sc.sources.zeta);
  for (double v : p_dbm) sc.sources.p.push_back(dbm_to_watts(v));

  const json& nz = detail::section(root, "noise", rd);
  detail::check_known(nz, "noise", {"sigma1_dbm", "sigma2_dbm"}, rd);
  double s1 = -80.0, s2 = -80.0;
  rd.get(nz, "noise", "sigma1_dbm", s1);
  rd.get(nz, "noise", "sigma2_dbm", s2);
  sc.noise = {dbm_to_watts(s1), dbm_to_watts(s2)};

  const json& pw = detail::section(root, "power", rd);
  detail::check_known(pw, "power", {"p_c_dbm", "p_dc_dbm", "p_aris_dbm", "p_pris_dbm"}, rd);
  double pc = -10.0, pdc = -5.0, pa = 10.0, pp = 10.0;
  rd.get(pw, "power", "p_c_dbm", pc);
  rd.get(pw, "power", "p_dc_dbm", pdc);
  rd.get(pw, "power", "p_aris_dbm", pa);
  rd.get(pw, "power", "p_pris_dbm", pp);
  sc.power = {dbm_to_watts(pc), dbm_to_watts(pdc), dbm_to_watts(pa), dbm_to_watts(pp)};

  rd.get(root, "", "a_max", sc.a_max);
  rd.get(root, "", "pd_target", sc.pd_target);
  rd.get(root, "", "trials", sc.trials);
  rd.get(root, "", "seed", sc.seed);
  rd.get(root, "", "direct_links", sc.direct_links);
  std::string method = to_string(sc.method), channel = "rayleigh";
  rd.get(root, "", "method", method);
  rd.get(root, "", "channel", channel);
  try {
    sc.method = parse_method(method);
  } catch (const ConfigError& e) {
    rd.error(std::string("field 'method': ") + e.what());
  }
  if (channel == "los") {
    sc.channel = ChannelKind::kLos;
    sc.direct_links = false;
  } else if (channel == "rayleigh") {
    sc.channel = ChannelKind::kRayleigh;
  } else {
    rd.error("field 'channel': expected 'los' or 'rayleigh', got '" + channel + "'");
  }
  sc.angles = derive_angles(sc.geometry);

  if (root.contains("sweep")) {
    const json& sw = detail::section(root, "sweep", rd);
    detail::check_known(sw, "sweep", {"variable", "values", "methods", "a_max"}, rd);
    SweepSpec spec;
    std::string var = "T";
    std::vector<std::string> methods;
    rd.get(sw, "sweep", "variable", var);
    rd.get(sw, "sweep", "values", spec.values);
    rd.get(sw, "sweep", "methods", methods);
    rd.get(sw, "sweep", "a_max", spec.a_max_values);
    if (var == "T") spec.variable = SweepVariable::kT;
    else if (var == "zeta") spec.variable = SweepVariable::kZeta;
    else if (var == "p") spec.variable = SweepVariable::kP;
    else if (var == "K") spec.variable = SweepVariable::kK;
    else rd.error("field 'sweep.variable': expected T|zeta|p|K, got '" + var + "'");
    if (!methods.empty()) {
      spec.methods.clear();
      for (const auto& m : methods) {
        try {
          spec.methods.push_back(parse_method(m));
        } catch (const ConfigError& e) {
          rd.error(std::string("field 'sweep.methods': ") + e.what());
        }
      }
    }
    if (spec.values.empty()) rd.error("field 'sweep.values': must list at least one value");
    if (spec.variable == SweepVariable::kK && !sc.placement)
      rd.error("field 'sweep': a K sweep needs geometry.interferers given as {count, r_min, r_max, seed}");
    for (double a : spec.a_max_values)
      if (!(a > 0.0)) rd.error("field 'sweep.a_max': values must be > 0");
    file.sweep = spec;
  }

  // Constraint checks
  auto check = [&](bool ok, const std::string& msg) {
    if (!ok) rd.error(msg);
  };
  check(sc.detector.n_antennas >= 1, "field 'detector.n_antennas': must be >= 1");
  check(sc.detector.n_samples >= 1, "field 'detector.n_samples': must be >= 1");
  check(sc.detector.alpha > 0.0 && sc.detector.alpha < 1.0, "field 'detector.alpha': must lie in (0, 1)");
  check(sc.ris.mh >= 1 && sc.ris.mv >= 1, "field 'ris': mh and mv must be >= 1");
  for (int m : sc.m_sweep) check(m >= 1, "field 'ris.m_sweep': element counts must be >= 1");
  check(sc.pathloss.lambda > 0.0, "field 'pathloss.lambda': must be > 0");
  for (std::size_t k = 0; k < sc.sources.zeta.size(); ++k)
    check(sc.sources.zeta[k] >= 0.0 && sc.sources.zeta[k] <= 1.0, "field 'sources.zeta': values must lie in [0, 1]");
  if (!sc.sources.zeta.empty() && sc.sources.zeta[0] != 1.0) {
    rd.error("field 'sources.zeta': the PU entry (index 0) must be 1");
  }
  for (double v : sc.sources.p) check(std::isfinite(v), "field 'sources.p_dbm': powers must be finite");
  check(std::isfinite(sc.noise.sigma1_sq) && sc.noise.sigma2_sq > 0.0 && std::isfinite(sc.noise.sigma2_sq),
        "section 'noise': powers must be finite");
  check(sc.a_max > 0.0, "field 'a_max': must be > 0");
  check(sc.pd_target > 0.0 && sc.pd_target < 1.0, "field 'pd_target': must lie in (0, 1)");
  check(sc.trials >= 1, "field 'trials': must be >= 1");
  check(sc.power.p_c > 0.0 && std::isfinite(sc.power.p_aris) && std::isfinite(sc.power.p_pris),
        "section 'power': powers must be finite");

  if (!errors.empty()) {
    std::string msg = origin + ": invalid scenario:";
    for (const auto& e : errors) msg += "\n  - " + e;
    throw ConfigError(msg);
  }
  return file;
}

inline ScenarioFile load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), path);
}

/// Replaces the interferer set by K seeded draws and keeps per-source vectors
/// consistent (new entries copy the last interferer's settings).
inline Scenario with_interferers(Scenario sc, int k) {
  require(k >= 0, "with_interferers: K must be >= 0");
  const InterfererPlacement pl = sc.placement.value_or(InterfererPlacement{});
  sc.geometry.interferer_pos = place_interferers(k, sc.geometry.ris_pos, pl.r_min, pl.r_max, pl.seed);
  const double p_last = sc.sources.p.size() > 1 ? sc.sources.p.back() : sc.sources.p.at(0);
  const double z_last = sc.sources.zeta.size() > 1 ? sc.sources.zeta.back() : 1.0;
  sc.sources.p.resize(k + 1, p_last);
  sc.sources.zeta.resize(k + 1, z_last);
  sc.angles = derive_angles(sc.geometry);
  return sc;
}

}  // namespace rissense
