#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace monopole {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using Mat2c = Eigen::Matrix2cd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Binomial coefficient as a double (small arguments only).
inline double binomial(int n, int j) {
  if (j < 0 || j > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= j; ++i) r = r * (n - j + i) / i;
  return r;
}

}  // namespace monopole
