#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., SC'11) plus helpers
// for complex circular Gaussian draws. A stream is identified by
// (seed, stream id); draws within a stream are indexed by a 64-bit counter,
// so any trial can be regenerated independently of the others.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

#include "common.hpp"

namespace rissense {

class Philox4x32 {
 public:
  using result_type = std::uint32_t;
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  Philox4x32(std::uint64_t seed, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream) {}

  static Block encrypt(Block ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }

  result_type operator()() {
    if (used_ == 4) refill();
    return buf_[used_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t hi = (*this)();
    return (hi << 32) | (*this)();
  }

  // Uniform on (0, 1), 53-bit resolution, never exactly 0.
  double uniform_open() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

  void refill() {
    buf_ = encrypt({static_cast<std::uint32_t>(counter_), static_cast<std::uint32_t>(counter_ >> 32),
                    static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)},
                   key_);
    ++counter_;
    used_ = 0;
  }

  Key key_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  Block buf_{};
  int used_ = 4;
};

// Stream ids used by the library. Trial index occupies the low 40 bits.
enum class StreamTag : std::uint64_t {
  kChannel = 1,
  kSignal = 2,
  kGeometry = 3,
  kTest = 15,
};

inline Philox4x32 make_stream(std::uint64_t seed, StreamTag tag, std::uint64_t index = 0) {
  return Philox4x32(seed, (static_cast<std::uint64_t>(tag) << 40) | (index & ((1ULL << 40) - 1)));
}

class GaussianSource {
 public:
  explicit GaussianSource(Philox4x32 gen) : gen_(gen) {}

  // CN(0, 1): real and imaginary parts each N(0, 1/2). Box-Muller.
  cplx complex_normal() {
    const double r = std::sqrt(-std::log(gen_.uniform_open()));
    const double t = 2.0 * kPi * gen_.uniform_open();
    return {r * std::cos(t), r * std::sin(t)};
  }

  double uniform() { return gen_.uniform_open(); }

  bool bernoulli(double p) { return gen_.uniform_open() < p; }

  // Entries i.i.d. CN(0, variance).
  CMat complex_normal(Eigen::Index rows, Eigen::Index cols, double variance = 1.0) {
    const double s = std::sqrt(variance);
    CMat out(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i) out(i, j) = s * complex_normal();
    return out;
  }

 private:
  Philox4x32 gen_;
};

}  // namespace rissense
