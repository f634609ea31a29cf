#include "monopole/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "monopole/error.hpp"

namespace monopole {

Complex poly_eval(const CVector& coeffs, Complex z) {
  Complex acc = 0.0;
  for (Eigen::Index j = coeffs.size() - 1; j >= 0; --j) acc = acc * z + coeffs(j);
  return acc;
}

Complex poly_eval(const CVector& coeffs, const SpherePoint& p) {
  const int degree = static_cast<int>(coeffs.size()) - 1;
  return monomials(p, degree).transpose() * coeffs;
}

CVector poly_mul(const CVector& a, const CVector& b) {
  CVector out = CVector::Zero(a.size() + b.size() - 1);
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < b.size(); ++j) out(i + j) += a(i) * b(j);
  return out;
}

namespace {

Complex derivative_eval(const CVector& c, Complex z) {
  Complex acc = 0.0;
  for (Eigen::Index j = c.size() - 1; j >= 1; --j) acc = acc * z + static_cast<double>(j) * c(j);
  return acc;
}

}  // namespace

std::vector<SpherePoint> projective_roots(const CVector& coeffs, double deficiency_tol) {
  const double scale = coeffs.cwiseAbs().maxCoeff();
  if (coeffs.size() == 0 || scale == 0.0)
    throw MonopoleError("polyroots", "IdenticallyZero", "polynomial has no nonzero coefficient");

  Eigen::Index top = coeffs.size() - 1;
  while (top > 0 && std::abs(coeffs(top)) <= deficiency_tol * scale) --top;
  const auto at_infinity = static_cast<std::size_t>(coeffs.size() - 1 - top);

  std::vector<SpherePoint> roots;
  roots.reserve(static_cast<std::size_t>(coeffs.size() - 1));
  if (top > 0) {
    const Eigen::Index n = top;
    CMatrix companion = CMatrix::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) companion(i, n - 1) = -coeffs(i) / coeffs(top);
    Eigen::ComplexEigenSolver<CMatrix> solver(companion, false);
    const CVector trimmed = coeffs.head(top + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
      Complex z = solver.eigenvalues()(i);
      const Complex d = derivative_eval(trimmed, z);
      if (d != Complex(0.0)) {
        const Complex polished = z - poly_eval(trimmed, z) / d;
        if (std::isfinite(polished.real()) && std::isfinite(polished.imag()) &&
            std::abs(poly_eval(trimmed, polished)) < std::abs(poly_eval(trimmed, z)))
          z = polished;
      }
      roots.emplace_back(z);
    }
  }
  for (std::size_t i = 0; i < at_infinity; ++i) roots.push_back(SpherePoint::infinity());
  return roots;
}

Complex resultant(const CVector& a, const CVector& b) {
  if (a.size() != b.size() || a.size() < 2)
    throw MonopoleError("polyroots", "InvalidShape", "resultant needs equal formal degrees >= 1");
  const Eigen::Index d = a.size() - 1;
  CMatrix sylvester = CMatrix::Zero(2 * d, 2 * d);
  // Rows hold coefficients from the highest power down.
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index j = 0; j <= d; ++j) {
      sylvester(r, r + j) = a(d - j);
      sylvester(d + r, r + j) = b(d - j);
    }
  return sylvester.determinant();
}

double root_set_distance(const std::vector<SpherePoint>& a, const std::vector<SpherePoint>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  const std::size_t n = a.size();
  if (n == 0) return 0.0;
  if (n <= 7) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
      double worst = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        worst = std::max(worst, chordal_distance(a[i], b[perm[i]]));
      best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }
  std::vector<bool> used(n, false);
  double worst = 0.0;
  for (const auto& p : a) {
    std::size_t pick = 0;
    double d_best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      const double d = chordal_distance(p, b[j]);
      if (d < d_best) {
        d_best = d;
        pick = j;
      }
    }
    used[pick] = true;
    worst = std::max(worst, d_best);
  }
  return worst;
}

}  // namespace monopole
