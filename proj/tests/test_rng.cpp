#include <catch_amalgamated.hpp>

#include <set>

#include "rissense/rng.hpp"

using namespace rissense;
using Catch::Approx;

TEST_CASE("philox known answers") {
  using B = Philox4x32::Block;
  CHECK(Philox4x32::encrypt({0, 0, 0, 0}, {0, 0}) == B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::encrypt({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox4x32::encrypt({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        B{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are reproducible and distinct") {
  auto a = make_stream(42, StreamTag::kSignal, 7);
  auto b = make_stream(42, StreamTag::kSignal, 7);
  auto c = make_stream(42, StreamTag::kSignal, 8);
  auto d = make_stream(43, StreamTag::kSignal, 7);
  auto e = make_stream(42, StreamTag::kChannel, 7);
  std::set<std::uint64_t> firsts;
  for (int i = 0; i < 100; ++i) {
    const auto va = a.next_u64();
    REQUIRE(va == b.next_u64());
    if (i == 0) {
      firsts = {va, c.next_u64(), d.next_u64(), e.next_u64()};
    }
  }
  CHECK(firsts.size() == 4);
}

TEST_CASE("uniform draws lie in the open unit interval") {
  auto g = make_stream(1, StreamTag::kTest);
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = g.uniform_open();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / n == Approx(0.5).margin(4.0 * std::sqrt(1.0 / 12.0 / n)));
}

TEST_CASE("complex normal draws are circular with unit variance") {
  GaussianSource src(make_stream(3, StreamTag::kTest));
  const int n = 200000;
  cplx mean = 0.0, pseudo = 0.0;
  double power = 0.0;
  for (int i = 0; i < n; ++i) {
    const cplx z = src.complex_normal();
    mean += z;
    pseudo += z * z;
    power += std::norm(z);
  }
  const double tol = 5.0 / std::sqrt(n);
  CHECK(std::abs(mean / double(n)) < tol);
  CHECK(std::abs(pseudo / double(n)) < 2.0 * tol);
  CHECK(power / n == Approx(1.0).margin(2.0 * tol));
}

TEST_CASE("matrix draws scale with the variance") {
  GaussianSource a(make_stream(9, StreamTag::kTest)), b(make_stream(9, StreamTag::kTest));
  const CMat x = a.complex_normal(3, 4, 1.0);
  const CMat y = b.complex_normal(3, 4, 4.0);
  CHECK((y - 2.0 * x).norm() < 1e-12);
}
