#include "monopole/centering.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "monopole/error.hpp"
#include "monopole/polyroots.hpp"

namespace monopole {

namespace {

constexpr double kUnimodularTol = 1e-12;
constexpr double kZeroVectorTol = 1e-14;

// Coefficients of (alpha z + beta)^n.
CVector linear_power(Complex alpha, Complex beta, int n) {
  CVector p = CVector::Zero(n + 1);
  p(0) = 1.0;
  for (int m = 1; m <= n; ++m) {
    for (int i = m; i >= 1; --i) p(i) = beta * p(i) + alpha * p(i - 1);
    p(0) *= beta;
  }
  return p;
}

// Unimodular representative of a unitary 2x2 matrix.
Mat2c special(const Mat2c& u) {
  const Complex s = std::sqrt(u.determinant());
  return u / s;
}

}  // namespace

Mobius Mobius::from_matrix(const Mat2c& m) {
  Mobius g{m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
  if (std::abs(g.det() - 1.0) > kUnimodularTol)
    throw MonopoleError("centering", "NotUnimodular",
                        "ad - bc differs from 1 by " + std::to_string(std::abs(g.det() - 1.0)));
  return g;
}

Mat2c Mobius::matrix() const {
  Mat2c m;
  m << a, b, c, d;
  return m;
}

Mobius Mobius::operator*(const Mobius& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

CMatrix action_matrix(const Mobius& g, int k) {
  CMatrix r = CMatrix::Zero(k + 1, k + 1);
  for (int j = 0; j <= k; ++j) {
    const CVector p = poly_mul(linear_power(g.c, g.d, k - j), linear_power(g.a, g.b, j));
    for (int l = 0; l <= k; ++l) r(l, j) = std::sqrt(binomial(k, j) / binomial(k, l)) * p(l);
  }
  return r;
}

CoeffTuple act_sl2(const Mobius& g, const CoeffTuple& t) {
  return CoeffTuple(t.v * action_matrix(g, t.k).transpose());
}

double norm2(const CoeffTuple& t) { return t.v.squaredNorm(); }

double MomentValue::magnitude() const { return std::sqrt(mu_r * mu_r + 2.0 * std::norm(mu_c)); }

MomentValue moment_map(const CoeffTuple& t) {
  MomentValue mu;
  const int k = t.k;
  for (int j = 0; j <= k; ++j) mu.mu_r += (2.0 * j - k) * t.v.col(j).squaredNorm();
  for (int j = 0; j < k; ++j)
    mu.mu_c += std::sqrt((j + 1.0) * (k - j)) * t.v.col(j).dot(t.v.col(j + 1));
  return mu;
}

bool stability_check(const CoeffTuple& t) {
  const double scale = std::max(t.v.norm(), 1e-300);
  if (t.v.col(0).norm() <= kZeroVectorTol * scale) return false;
  if (t.v.col(t.k).norm() <= kZeroVectorTol * scale) return false;
  return fullness(t) > 1e-12;
}

Mat2c exp_traceless(const Mat2c& xi) {
  // xi^2 = -det(xi) I, so exp(xi) = cosh(l) I + sinh(l)/l xi with l^2 = -det xi.
  const Complex l = std::sqrt(-xi.determinant());
  const Complex sinhc = std::abs(l) < 1e-8 ? Complex(1.0) + l * l / 6.0 : std::sinh(l) / l;
  return std::cosh(l) * Mat2c::Identity() + sinhc * xi;
}

FlowResult center_flow(const CoeffTuple& t, double tol, int max_iter) {
  if (!stability_check(t))
    throw MonopoleError("centering", "NotStable",
                        "tuple is not a stable point (v_0 = 0, v_k = 0 or not full)");
  const int k = t.k;
  FlowResult result;
  result.g = Mobius::identity();
  CoeffTuple cur = t;
  for (int iter = 0;; ++iter) {
    const MomentValue mu = moment_map(cur);
    const double n2 = norm2(cur);
    result.trace.push_back({iter, n2, mu.magnitude()});
    if (mu.magnitude() <= tol * n2) break;
    if (iter >= max_iter) {
      result.centred = cur;
      throw PartialResultError<FlowResult>(
          "centering", "MaxIterExceeded",
          "|mu| = " + std::to_string(mu.magnitude()) + " after " + std::to_string(iter) +
              " iterations",
          result);
    }

    // xi = U diag(lambda, -lambda) U^*; along exp(-s xi) the norm is the convex
    // function f(s) = sum_j n_j exp(-2 s lambda (2j - k)).
    Mat2c xi;
    xi << mu.mu_r, std::conj(mu.mu_c), mu.mu_c, -mu.mu_r;
    const double lambda = std::sqrt(mu.mu_r * mu.mu_r + std::norm(mu.mu_c));
    Eigen::SelfAdjointEigenSolver<Mat2c> es(xi);
    // Columns ordered (lambda, -lambda).
    Mat2c u;
    u.col(0) = es.eigenvectors().col(1);
    u.col(1) = es.eigenvectors().col(0);
    u = special(u);
    const CoeffTuple rotated = act_sl2(Mobius::from_matrix(u), cur);
    Eigen::VectorXd n(k + 1), wgt(k + 1);
    for (int j = 0; j <= k; ++j) {
      n(j) = rotated.v.col(j).squaredNorm();
      wgt(j) = -2.0 * lambda * (2.0 * j - k);
    }
    auto f = [&](double s) { return (n.array() * (wgt.array() * s).exp()).sum(); };
    double s = 0.0;
    for (int newton = 0; newton < 60; ++newton) {
      const Eigen::ArrayXd e = (wgt.array() * s).exp();
      const double f1 = (n.array() * wgt.array() * e).sum();
      const double f2 = (n.array() * wgt.array().square() * e).sum();
      if (!(f2 > 0.0)) break;
      const double ds = -f1 / f2;
      s += ds;
      if (std::abs(ds) <= 1e-15 * std::max(1.0, std::abs(s))) break;
    }
    // Armijo safeguard against a poor Newton solve.
    const double f0 = f(0.0);
    const double slope = -2.0 * mu.magnitude() * mu.magnitude();
    if (!(s > 0.0)) s = 1.0 / std::max(lambda, 1e-300);
    while (f(s) > f0 + 1e-4 * s * slope && s > 1e-300) s *= 0.5;

    const Mat2c step = exp_traceless(-s * xi);
    const Mobius h = Mobius::from_matrix(step / std::sqrt(step.determinant()));
    Mobius g = result.g * h;
    const Complex scale = std::sqrt(g.det());
    g = {g.a / scale, g.b / scale, g.c / scale, g.d / scale};
    result.g = g;
    cur = act_sl2(result.g, t);
  }
  result.centred = cur;
  return result;
}

Vec3 HyperbolicPoint::upper_half_space() const {
  const double x3 = 1.0 / X(0, 0).real();
  const Complex x12 = X(0, 1) * x3;
  return {x12.real(), x12.imag(), x3};
}

HyperbolicPoint centre_point(const Mobius& g) {
  const Mat2c gi = g.inverse().matrix();
  Mat2c x = gi.adjoint() * gi;
  x = (x + x.adjoint()) / 2.0;
  x /= std::sqrt(x.determinant().real());
  return {x};
}

}  // namespace monopole
