#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace rissense {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kJ{0.0, 1.0};

// Error hierarchy. Each family maps onto one CLI exit code (see tools/).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad or inconsistent configuration (exit code 2).
struct ConfigError : Error {
  using Error::Error;
};

/// Shapes that do not agree with (N, M, K).
struct DimensionError : ConfigError {
  using ConfigError::ConfigError;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : ConfigError {
  using ConfigError::ConfigError;
};

/// Target cannot be met (exit code 3).
struct InfeasibleError : Error {
  using Error::Error;
};

/// Singular / indefinite matrices and other numerical breakdowns (exit code 4).
struct NumericalError : Error {
  using Error::Error;
};

/// Probability outside the tabulated support of a distribution.
struct RangeError : NumericalError {
  using NumericalError::NumericalError;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw DomainError(what);
}

inline void require_dims(bool cond, const std::string& what) {
  if (!cond) throw DimensionError(what);
}

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// floor(x) that tolerates ratios such as 0.01 / 1e-4 landing a few ulps
// below an integer.
inline long floor_count(double x) {
  return static_cast<long>(std::floor(x * (1.0 + 1e-12) + 1e-12));
}

}  // namespace rissense
