// Interference-free LoS link: closed-form amplitude and element count for a
// 10 dBm active RIS, then the budget each method needs for Pd = 0.9.

#include <cstdio>

#include "rissense/rissense.hpp"

using namespace rissense;

int main() {
  Scenario sc;
  sc.channel = ChannelKind::kLos;
  sc.direct_links = false;
  sc.detector = {64, 6400, 0.1};
  sc.sources = {{1.0}, {1.0}};
  sc.noise = {dbm_to_watts(-80.0), dbm_to_watts(-80.0)};
  sc.angles = derive_angles(sc.geometry);

  const LinkGains g = compute_link_gains(sc);
  const auto k = no_interference_constants(sc.detector.n_antennas, g.beta_g, g.beta_f[0], 1.0, sc.noise, sc.power);
  const auto amp = optimal_amplitude(k, sc.power.p_aris, sc.a_max);
  const auto mc = optimal_m(k, sc.power.p_aris, sc.a_max, amp.a_opt);
  std::printf("sqrt(A0) = %.2f, a_opt = %.2f, M = %.2f -> %d elements at a = %.3f\n", std::sqrt(amp.a0), amp.a_opt,
              mc.m_real, mc.m_bar, mc.a_bar);
  const double eta = eta_active_no_interference(sc.detector.n_antennas, mc.m_bar, mc.a_bar, g.beta_f[0], g.beta_g,
                                                1.0, sc.noise);
  std::printf("eta = %.4g, predicted Pd = %.4f\n", eta, predicted_pd(eta, sc.detector).pd);
  std::printf("eta needed for Pd = 0.9: %.4g\n", solve_min_eta(0.9, sc.detector));

  for (Method m : {Method::kMf, Method::kMmse, Method::kWmmse, Method::kPassive}) {
    const BudgetResult r = required_budget(m, 0.9, sc);
    std::printf("%-8s %7.3f dBm with M = %d\n", to_string(m).c_str(), watts_to_dbm(r.required_power), r.m_star);
  }
}
