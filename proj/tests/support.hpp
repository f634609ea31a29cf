#pragma once

// Shared generators and independent oracles for the test suites. Randomness
// is a fixed-seed mt19937_64 so every run sees the same cases.

#include <cmath>
#include <complex>
#include <random>

#include "monopole/centering.hpp"
#include "monopole/charge2.hpp"
#include "monopole/curve.hpp"
#include "monopole/sphere.hpp"

namespace testing_support {

using monopole::CMatrix;
using monopole::Complex;
using monopole::CVector;

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 20240611) : gen_(seed) {}

  double uniform(double a = 0.0, double b = 1.0) {
    return std::uniform_real_distribution<double>(a, b)(gen_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }
  Complex cnormal() { return {normal(), normal()}; }

  CMatrix cmatrix(int rows, int cols) {
    CMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = cnormal();
    return m;
  }

  /// Hermitian positive definite with condition number of modest size.
  CMatrix positive_definite(int k) {
    const CMatrix a = cmatrix(k + 1, k + 1);
    CMatrix psi = a.adjoint() * a + 0.5 * (k + 1) * CMatrix::Identity(k + 1, k + 1);
    return (psi + psi.adjoint()) / 2.0;
  }

  CMatrix upper_triangular(int k) {
    CMatrix q = CMatrix::Zero(k + 1, k + 1);
    for (int i = 0; i <= k; ++i) {
      q(i, i) = uniform(0.5, 2.0);
      for (int j = i + 1; j <= k; ++j) q(i, j) = cnormal();
    }
    return q;
  }

  CMatrix unitary(int n) {
    Eigen::HouseholderQR<CMatrix> qr(cmatrix(n, n));
    return qr.householderQ() * CMatrix::Identity(n, n);
  }

  monopole::Mat2c su2() {
    const Complex a = cnormal(), b = cnormal();
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    monopole::Mat2c u;
    u << a / n, -std::conj(b) / n, b / n, std::conj(a) / n;
    return u;
  }

  /// A random SL(2,C) element of moderate size.
  monopole::Mobius sl2(double spread = 0.6) {
    monopole::Mat2c m;
    m << Complex(1.0) + spread * cnormal(), spread * cnormal(), spread * cnormal(),
        Complex(1.0) + spread * cnormal();
    m /= std::sqrt(m.determinant());
    return monopole::Mobius::from_matrix(m);
  }

  /// A point of the Riemann sphere with |z| spread over a few decades.
  Complex point() { return std::polar(std::exp(uniform(-1.2, 1.2)), uniform(-M_PI, M_PI)); }

  monopole::CoeffTuple tuple(int k) { return monopole::CoeffTuple(cmatrix(k + 1, k + 1)); }

  monopole::Su2Triple triple() {
    monopole::Su2Triple nu;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) nu.r(i, j) = normal();
    return nu;
  }

 private:
  std::mt19937_64 gen_;
};

/// sum_ij Psi_ij (-1/w)^i z^j by direct expansion.
inline Complex oracle_psi(const CMatrix& psi, Complex w, Complex z) {
  Complex sum = 0.0;
  for (int i = 0; i < psi.rows(); ++i)
    for (int j = 0; j < psi.cols(); ++j)
      sum += psi(i, j) * std::pow(-1.0 / w, i) * std::pow(z, j);
  return sum;
}

/// Coefficients (z^4 .. z^0) of z^2 psi(z, z) = sum_ij Psi_ij (-1)^i z^{2-i+j}.
inline std::array<Complex, 5> oracle_diagonal_quartic(const CMatrix& psi) {
  std::array<Complex, 5> c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[4 - (2 - i + j)] += (i % 2 == 0 ? 1.0 : -1.0) * psi(i, j);
  return c;
}

/// Gram matrix eigenvalues of the tuple vectors, ascending.
inline Eigen::VectorXd gram_spectrum(const monopole::CoeffTuple& t) {
  const CMatrix g = t.v.adjoint() * t.v;
  Eigen::SelfAdjointEigenSolver<CMatrix> es((g + g.adjoint()) / 2.0);
  return es.eigenvalues();
}

inline double rel(const CMatrix& a, const CMatrix& b) {
  return (a - b).norm() / std::max(b.norm(), 1e-300);
}

}  // namespace testing_support
