#include "monopole/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "monopole/error.hpp"

namespace monopole {

SpherePoint SpherePoint::homogeneous(Complex z0, Complex z1) {
  if (z0 == Complex(0.0) && z1 == Complex(0.0))
    throw MonopoleError("curve_core", "InvalidPoint", "homogeneous coordinates (0 : 0)");
  return SpherePoint(z0, z1, 0);
}

Complex SpherePoint::chart() const {
  if (is_infinity())
    throw MonopoleError("curve_core", "InvalidPoint", "chart value requested at infinity");
  return z1_ / z0_;
}

SpherePoint SpherePoint::representative() const {
  if (is_infinity()) return SpherePoint(0.0, 1.0, 0);
  return SpherePoint(1.0, z1_ / z0_, 0);
}

SpherePoint antipode(const SpherePoint& p) {
  return SpherePoint::homogeneous(-std::conj(p.z1()), std::conj(p.z0()));
}

SpherePoint negative_inverse(const SpherePoint& p) {
  return SpherePoint::homogeneous(p.z1(), -p.z0());
}

double chordal_distance(const SpherePoint& a, const SpherePoint& b) {
  const double na = std::hypot(std::abs(a.z0()), std::abs(a.z1()));
  const double nb = std::hypot(std::abs(b.z0()), std::abs(b.z1()));
  return std::abs(a.z0() * b.z1() - a.z1() * b.z0()) / (na * nb);
}

CVector monomials(const SpherePoint& p, int k) {
  const SpherePoint r = p.representative();
  CVector v(k + 1);
  if (r.is_infinity()) {
    v.setZero();
    v(k) = 1.0;
    return v;
  }
  const Complex z = r.z1();
  Complex power = 1.0;
  for (int j = 0; j <= k; ++j) {
    v(j) = power;
    power *= z;
  }
  return v;
}

SpectralMatrix::SpectralMatrix(CMatrix psi_matrix, bool is_normalized)
    : k(static_cast<int>(psi_matrix.rows()) - 1),
      psi(std::move(psi_matrix)),
      normalized(is_normalized) {
  if (psi.rows() != psi.cols() || psi.rows() < 2)
    throw MonopoleError("curve_core", "InvalidShape",
                        "coefficient matrix must be square of size k+1 >= 2, got " +
                            std::to_string(psi.rows()) + "x" + std::to_string(psi.cols()));
}

Complex eval_psi_chart(const SpectralMatrix& s, Complex w, Complex z) {
  const CVector u = monomials(SpherePoint(-1.0 / w), s.k);
  const CVector v = monomials(SpherePoint(z), s.k);
  return u.transpose() * s.psi * v;
}

Complex eval_psi(const SpectralMatrix& s, const SpherePoint& w, const SpherePoint& z) {
  const CVector u = monomials(negative_inverse(w), s.k);
  const CVector v = monomials(z, s.k);
  return u.transpose() * s.psi * v;
}

double normalized_psi_residual(const SpectralMatrix& s, const SpherePoint& w,
                               const SpherePoint& z) {
  const CVector u = monomials(negative_inverse(w), s.k);
  const CVector v = monomials(z, s.k);
  const Complex value = u.transpose() * s.psi * v;
  return std::abs(value) / (s.psi.norm() * u.norm() * v.norm());
}

std::vector<SpherePoint> antidiagonal_panel() {
  constexpr int kAngles = 64;
  std::vector<SpherePoint> panel;
  panel.reserve(3 * kAngles + 2);
  panel.emplace_back(0.0);
  panel.push_back(SpherePoint::infinity());
  for (const double radius : {0.5, 1.0, 2.0}) {
    for (int j = 0; j < kAngles; ++j) {
      const double theta = kPi * (1.0 + std::cos((2.0 * j + 1.0) * kPi / (2.0 * kAngles)));
      panel.emplace_back(std::polar(radius, theta));
    }
  }
  return panel;
}

Complex antidiagonal_value(const SpectralMatrix& s, const SpherePoint& z) {
  const CVector v = monomials(z, s.k);
  const Complex value = v.adjoint() * s.psi * v;
  return value / (s.psi.norm() * v.squaredNorm());
}

SpectralMatrix normalize_reality(const SpectralMatrix& raw) {
  const CMatrix& m = raw.psi;
  const double norm = m.norm();
  if (norm == 0.0)
    throw MonopoleError("curve_core", "VanishesOnAntidiagonal", "zero coefficient matrix");

  CMatrix hermitian;
  if (m == m.adjoint()) {
    hermitian = m;
  } else {
    const CMatrix adj = m.adjoint();
    const Complex c = m.conjugate().cwiseProduct(adj).sum() / m.squaredNorm();
    const double mismatch = (adj - c * m).norm() / norm;
    if (mismatch > kHermitianTol || std::abs(std::abs(c) - 1.0) > kHermitianTol)
      throw MonopoleError("curve_core", "NotRealCurve",
                          "conjugate transpose is not a unit-modulus multiple (mismatch " +
                              std::to_string(mismatch) + ", |c| = " +
                              std::to_string(std::abs(c)) + ")");
    // (lambda Psi)^* = lambda Psi  <=>  lambda^2 = c |lambda|^2.
    const Complex lambda = std::polar(1.0, std::arg(c) / 2.0);
    const CMatrix scaled = lambda * m;
    hermitian = (scaled + scaled.adjoint()) / 2.0;
  }

  SpectralMatrix out(hermitian, true);
  out.massless = raw.massless;
  int positive = 0;
  int negative = 0;
  for (const auto& z : antidiagonal_panel()) {
    const double value = antidiagonal_value(out, z).real();
    if (value > kHermitianTol)
      ++positive;
    else if (value < -kHermitianTol)
      ++negative;
    else
      throw MonopoleError("curve_core", "VanishesOnAntidiagonal",
                          "psi is within tolerance of zero on the antidiagonal");
  }
  if (positive > 0 && negative > 0)
    throw MonopoleError("curve_core", "VanishesOnAntidiagonal",
                        "psi changes sign on the antidiagonal");
  if (negative > 0) out.psi = -out.psi;
  return out;
}

PositivityReport positivity_check(const SpectralMatrix& s) {
  const double norm = s.psi.norm();
  if ((s.psi - s.psi.adjoint()).norm() > kHermitianTol * std::max(norm, 1e-300))
    throw MonopoleError("curve_core", "NotHermitian", "coefficient matrix is not Hermitian");
  const CMatrix sym = (s.psi + s.psi.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym, Eigen::EigenvaluesOnly);
  PositivityReport report;
  const Eigen::VectorXd& ev = solver.eigenvalues();
  report.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  const double largest = ev.cwiseAbs().maxCoeff();
  report.positive_definite = ev(0) > kHermitianTol * largest;
  return report;
}

NondegeneracyReport nondegeneracy_check(const SpectralMatrix& s) {
  NondegeneracyReport report;
  report.determinant = s.psi.determinant();
  Eigen::JacobiSVD<CMatrix> svd(s.psi);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  report.condition_estimate = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
  // |det| against ||Psi||_2^{k+1}, the largest it could be.
  report.degenerate =
      std::abs(report.determinant) <= kHermitianTol * std::pow(smax, s.k + 1) || smin == 0.0;
  return report;
}

std::vector<Complex> axial_roots(int k, double mass, double alpha) {
  if (k < 1) throw MonopoleError("curve_core", "InvalidCharge", "axial curves need k >= 1");
  if (mass < 0.0) throw MonopoleError("curve_core", "InvalidMass", "mass must be >= 0");
  if (!(alpha > 0.0)) throw MonopoleError("curve_core", "InvalidScale", "alpha must be > 0");
  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const double j = (1.0 - k) / 2.0 + i;
    roots.push_back(std::polar(alpha, 2.0 * kPi * j / (k + 2.0 * mass)));
  }
  return roots;
}

SpectralMatrix axial_spectral(int k, double mass, double alpha) {
  const auto roots = axial_roots(k, mass, alpha);
  // prod_j (1 + a_j x) = sum_j e_j x^j.
  CVector e = CVector::Zero(k + 1);
  e(0) = 1.0;
  for (const Complex a : roots)
    for (int j = k; j >= 1; --j) e(j) += a * e(j - 1);

  CMatrix psi = CMatrix::Zero(k + 1, k + 1);
  for (int j = 0; j <= k; ++j) {
    if (std::abs(e(j).imag()) > kHermitianTol * std::max(1.0, std::abs(e(j))))
      throw MonopoleError("curve_core", "NotRealCurve", "axial coefficient is not real");
    psi(j, j) = e(j).real();
  }
  const bool massless = mass == 0.0;
  if (massless) {
    for (int j = 1; j < k; ++j) psi(j, j) = 0.0;
    psi(k, k) = std::pow(alpha, k);
  }
  SpectralMatrix out(psi, true);
  out.massless = massless;
  return out;
}

}  // namespace monopole
