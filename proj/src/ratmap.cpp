#include "monopole/ratmap.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "monopole/error.hpp"
#include "monopole/polyroots.hpp"

namespace monopole {

namespace {

constexpr double kLineTol = 1e-10;
constexpr double kClusterTol = 1e-6;
constexpr double kRealPointTol = 1e-12;

int true_degree(const CVector& c) {
  const double scale = c.cwiseAbs().maxCoeff();
  for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j)
    if (std::abs(c(j)) > 1e-13 * scale) return j;
  return -1;
}

// Divides by the largest-modulus coefficient; returns that coefficient.
Complex normalise(CVector& c) {
  Eigen::Index idx = 0;
  c.cwiseAbs().maxCoeff(&idx);
  const Complex lead = c(idx);
  c /= lead;
  return lead;
}

// m-th derivative of q at p, in the chart around p (1/z chart at infinity).
CVector sphere_jet(const HoloSphere& q, const SpherePoint& p, int m) {
  if (!p.is_infinity()) return eval_sphere_derivative(q, p.chart(), m);
  // q(1/zeta) zeta^k = Q J v(zeta); its m-th derivative at 0 is m! Q e_{k-m}.
  double fact = 1.0;
  for (int i = 2; i <= m; ++i) fact *= i;
  return fact * q.Q.col(q.k - m);
}

double line_angle(const ProjLine& a, const ProjLine& b) {
  // sin of the largest principal angle between the two planes.
  CMatrix pa(a.u1.size(), 2), pb(b.u1.size(), 2);
  pa << a.u1, a.u2;
  pb << b.u1, b.u2;
  // Taken from the component of b orthogonal to a; sqrt(1 - cos^2) would
  // bottom out at sqrt(eps).
  const CMatrix rest = pb - pa * (pa.adjoint() * pb);
  return Eigen::JacobiSVD<CMatrix>(rest).singularValues().maxCoeff();
}

}  // namespace

int RationalMap::formal_degree() const {
  return static_cast<int>(std::max(num.size(), den.size())) - 1;
}

int RationalMap::degree() const { return std::max(true_degree(num), true_degree(den)); }

SpherePoint RationalMap::operator()(const SpherePoint& z) const {
  const int d = formal_degree();
  CVector n = CVector::Zero(d + 1), e = CVector::Zero(d + 1);
  n.head(num.size()) = num;
  e.head(den.size()) = den;
  return SpherePoint::homogeneous(poly_eval(e, z), scale * poly_eval(n, z));
}

std::vector<SpherePoint> spectral_slice(const HoloSphere& q, const SpherePoint& w) {
  const CVector qw = eval_sphere(q, w);
  const CVector coeffs = (qw.adjoint() * q.Q).transpose();
  try {
    return projective_roots(coeffs);
  } catch (const MonopoleError&) {
    throw MonopoleError("ratmap", "IdenticallyZero", "<q(w), q(z)> vanishes identically");
  }
}

ProjLine line_through(const HoloSphere& q, const SpherePoint& w, const CVector& direction) {
  ProjLine line;
  line.u1 = eval_sphere(q, w).normalized();
  CVector u2 = direction - line.u1 * line.u1.dot(direction);
  if (u2.norm() <= 1e-10 * std::max(direction.norm(), 1e-300))
    throw MonopoleError("ratmap", "LineNotThroughQw", "direction is parallel to q(w)");
  line.u2 = u2.normalized();
  return line;
}

RationalMap project_map(const HoloSphere& q, const SpherePoint& w, const ProjLine& line) {
  const CVector qw = eval_sphere(q, w).normalized();
  if (std::abs(std::abs(line.u1.dot(qw)) - 1.0) > kLineTol ||
      std::abs(line.u1.norm() - 1.0) > kLineTol || std::abs(line.u2.norm() - 1.0) > kLineTol ||
      std::abs(line.u1.dot(line.u2)) > kLineTol)
    throw MonopoleError("ratmap", "LineNotThroughQw",
                        "line is not an orthonormal pair with u1 parallel to q(w)");
  RationalMap f;
  f.num = (line.u2.adjoint() * q.Q).transpose();
  f.den = (line.u1.adjoint() * q.Q).transpose();
  const Complex ln = normalise(f.num);
  const Complex ld = normalise(f.den);
  f.scale = ln / ld;
  return f;
}

std::vector<SpherePoint> map_zeros(const RationalMap& f) { return projective_roots(f.num); }

std::vector<SpherePoint> map_poles(const RationalMap& f) { return projective_roots(f.den); }

LineResult find_line(const HoloSphere& q, const SpherePoint& w, double tol, int max_iter) {
  const int k = q.k;
  LineResult result;
  const CVector qw = eval_sphere(q, w);
  if (k == 1) {
    // The line is all of C^2.
    CVector perp(2);
    perp << -std::conj(qw(1)), std::conj(qw(0));
    result.line = line_through(q, w, perp);
    return result;
  }

  CVector start = eval_sphere(q, antipode(w));
  start -= qw.normalized() * qw.normalized().dot(start);
  if (start.norm() <= 1e-8 * qw.norm()) {
    // Fall back to the coordinate axis least aligned with q(w).
    Eigen::Index idx = 0;
    qw.cwiseAbs().minCoeff(&idx);
    start = CVector::Unit(k + 1, idx);
  }
  ProjLine line = line_through(q, w, start);

  for (int iter = 1; iter <= max_iter; ++iter) {
    const RationalMap f = project_map(q, w, line);
    const std::vector<SpherePoint> zeros = map_zeros(f);
    // q-jets at the zeros, with derivatives for repeated zeros.
    CMatrix span(k + 1, static_cast<Eigen::Index>(zeros.size()));
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      int order = 0;
      for (std::size_t j = 0; j < i; ++j)
        if (chordal_distance(zeros[i], zeros[j]) < kClusterTol) ++order;
      if (order > 0 && zeros.size() > 1) {
        // A repeated zero: its first occurrence fixes the base point.
        for (std::size_t j = 0; j < i; ++j) {
          if (chordal_distance(zeros[i], zeros[j]) < kClusterTol) {
            span.col(static_cast<Eigen::Index>(i)) = sphere_jet(q, zeros[j], order);
            break;
          }
        }
      } else {
        span.col(static_cast<Eigen::Index>(i)) = sphere_jet(q, zeros[i], 0);
      }
    }
    Eigen::JacobiSVD<CMatrix> svd(span.adjoint(), Eigen::ComputeFullV);
    const double smin = svd.singularValues().minCoeff();
    if (smin <= 1e-12 * svd.singularValues().maxCoeff())
      throw MonopoleError("ratmap", "DegenerateZeros",
                          "q-images of the zeros do not span a hyperplane");
    const CVector normal = svd.matrixV().col(k);
    ProjLine next = line_through(q, w, normal);
    result.angle = line_angle(line, next);
    line = next;
    result.line = line;
    result.iterations = iter;
    if (result.angle < tol) return result;
  }
  throw PartialResultError<LineResult>("ratmap", "NoConvergence",
                                       "line still moving by " + std::to_string(result.angle),
                                       result);
}

SpectralMatrix massless_curve(const RationalMap& f) {
  const int n = f.formal_degree();
  if (f.degree() < 1 || n < 1)
    throw MonopoleError("ratmap", "DegreeZero", "a constant map has no massless curve");
  CMatrix m = CMatrix::Zero(2, n + 1);
  m.row(0).head(f.den.size()) = f.den.transpose();
  m.row(1).head(f.num.size()) = f.scale * f.num.transpose();
  // Drop a common formal excess so the curve has bidegree (N, N) with N = degree.
  const int d = f.degree();
  const CMatrix mm = m.leftCols(d + 1);
  const CMatrix psi = mm.adjoint() * mm;

  const double norm = psi.norm();
  if (psi.row(d).norm() <= 1e-13 * norm || psi.col(d).norm() <= 1e-13 * norm)
    throw MonopoleError("ratmap", "DegreeZero", "curve does not have full bidegree");

  const CVector den = mm.row(0).transpose();
  const CVector num = mm.row(1).transpose();
  const double res = std::abs(resultant(den, num));
  const double res_scale = std::pow(den.norm(), d) * std::pow(num.norm(), d);
  if (res <= kRealPointTol * res_scale)
    throw MonopoleError("ratmap", "RealPointFound",
                        "numerator and denominator share a root: C_f meets the antidiagonal");

  SpectralMatrix out(psi, true);
  out.massless = true;
  std::vector<SpherePoint> samples;
  samples.emplace_back(0.0);
  samples.push_back(SpherePoint::infinity());
  for (int j = 0; j < 256; ++j) {
    const double radius = std::exp(2.0 * std::sin(0.37 * j));
    samples.emplace_back(std::polar(radius, 2.0 * kPi * j / 256.0));
  }
  for (const SpherePoint& z : samples) {
    const double value = antidiagonal_value(out, z).real();
    if (!(value > kRealPointTol))
      throw MonopoleError("ratmap", "RealPointFound",
                          "C_f meets the antidiagonal within sampling tolerance");
  }
  return out;
}

}  // namespace monopole
