#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace rissense;
using Catch::Approx;

TEST_CASE("ULA steering vector") {
  const CVec v = steering_vector_ula(5, 0.3);
  for (int m = 0; m < 5; ++m) {
    CHECK(std::abs(v(m)) == Approx(1.0));
    CHECK(std::abs(v(m) - std::polar(1.0, -0.3 * m)) < 1e-14);
  }
  CHECK_THROWS_AS(steering_vector_ula(0, 0.1), DimensionError);
}

TEST_CASE("UPA steering vector is the Kronecker product horizontal x vertical") {
  const double th = 0.4, ps = 0.2;
  const CVec v = steering_vector_upa(3, 4, th, ps);
  const CVec ah = steering_vector_ula(3, M_PI * std::sin(th) * std::cos(ps));
  const CVec av = steering_vector_ula(4, M_PI * std::cos(th) * std::cos(ps));
  REQUIRE(v.size() == 12);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) CHECK(std::abs(v(i * 4 + j) - ah(i) * av(j)) < 1e-14);
}

TEST_CASE("pathloss") {
  const double lambda = 0.12;
  CHECK(pathloss(lambda, 10.0, 2.0) == Approx(lambda * lambda / (16.0 * M_PI * M_PI * 100.0)).epsilon(1e-14));
  // PU to RIS distance of the default geometry is sqrt(100^2 + 50^2) = 111.803 m.
  Scenario sc;
  const LinkGains g = compute_link_gains(sc);
  CHECK(g.beta_f[0] == Approx(0.0144 / (16.0 * M_PI * M_PI * 12500.0)).epsilon(1e-12));
  CHECK(g.beta_f[0] == Approx(7.2951e-9).epsilon(1e-4));
  CHECK(g.beta_d[0] == Approx(0.0144 / (16.0 * M_PI * M_PI * std::pow(500.0, 4))).epsilon(1e-12));
  CHECK(g.beta_g == Approx(0.0144 / (16.0 * M_PI * M_PI * (400.0 * 400.0 + 2500.0))).epsilon(1e-12));
  CHECK_THROWS_AS(pathloss(lambda, 0.0, 2.0), DomainError);
}

TEST_CASE("interferer placement") {
  const Point2 c{100.0, 50.0};
  const auto a = place_interferers(50, c, 50.0, 60.0, 11);
  const auto b = place_interferers(50, c, 50.0, 60.0, 11);
  const auto d = place_interferers(50, c, 50.0, 60.0, 12);
  REQUIRE(a.size() == 50);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double r = distance(a[i], c);
    CHECK(r >= 50.0 - 1e-9);
    CHECK(r <= 60.0 + 1e-9);
    CHECK(a[i].x == b[i].x);
    CHECK(a[i].y == b[i].y);
  }
  CHECK(a[0].x != d[0].x);
  CHECK(place_interferers(0, c, 50.0, 60.0, 1).empty());
  CHECK_THROWS_AS(place_interferers(2, c, 60.0, 50.0, 1), ConfigError);
}

TEST_CASE("angles follow the planar geometry") {
  Geometry g;
  g.interferer_pos = {{100.0, 100.0}};
  const AngleSet a = derive_angles(g);
  REQUIRE(a.source_aoa.size() == 2);
  CHECK(a.source_aoa[0].theta == Approx(std::atan2(-50.0, -100.0)));
  CHECK(a.source_aoa[1].theta == Approx(M_PI / 2));
  CHECK(a.g_aod.theta == Approx(std::atan2(-50.0, 400.0)));
  CHECK(a.g_aoa == Approx(std::atan2(50.0, -400.0)));
}

TEST_CASE("LoS channel set structure") {
  Scenario sc;
  sc.geometry.interferer_pos = place_interferers(2, sc.geometry.ris_pos, 50, 60, 3);
  sc.angles = derive_angles(sc.geometry);
  sc.detector.n_antennas = 6;
  sc.ris = {4, 2};
  const ChannelSet ch = build_los_channelset(sc);
  REQUIRE(ch.G.rows() == 6);
  REQUIRE(ch.G.cols() == 8);
  REQUIRE(ch.num_sources() == 3);
  Eigen::JacobiSVD<CMat> svd(ch.G);
  CHECK(svd.singularValues()(1) < 1e-12 * svd.singularValues()(0));
  CHECK(svd.singularValues()(0) == Approx(std::sqrt(ch.betas.beta_g * 6 * 8)).epsilon(1e-12));
  for (int k = 0; k < 3; ++k) {
    CHECK(ch.d[k].norm() == 0.0);
    CHECK(ch.f[k].squaredNorm() == Approx(ch.betas.beta_f[k] * 8).epsilon(1e-12));
    CHECK((ch.f[k] - std::sqrt(ch.betas.beta_f[k]) * ch.los->a_f[k]).norm() < 1e-15);
  }
  CHECK((ch.G - std::sqrt(ch.betas.beta_g) * ch.los->a_g * ch.los->b_g.adjoint()).norm() < 1e-15);

  Scenario bad = sc;
  bad.angles.reset();
  CHECK_THROWS_AS(build_los_channelset(bad), ConfigError);
}

TEST_CASE("Rayleigh channel draws") {
  Scenario sc;
  sc.geometry.interferer_pos = place_interferers(1, sc.geometry.ris_pos, 50, 60, 3);
  sc.detector.n_antennas = 40;
  sc.ris = {50, 1};
  const ChannelSet a = sample_rayleigh_channelset(sc, 5, 0);
  const ChannelSet b = sample_rayleigh_channelset(sc, 5, 0);
  const ChannelSet c = sample_rayleigh_channelset(sc, 5, 1);
  CHECK((a.G - b.G).norm() == 0.0);
  CHECK((a.G - c.G).norm() > 0.0);
  const double var = a.G.cwiseAbs2().mean();
  CHECK(var == Approx(a.betas.beta_g).epsilon(0.1));
  CHECK(a.d[0].norm() > 0.0);

  sc.direct_links = false;
  const ChannelSet nd = sample_rayleigh_channelset(sc, 5, 0);
  CHECK(nd.d[0].norm() == 0.0);
  CHECK(nd.d[1].norm() == 0.0);
}
