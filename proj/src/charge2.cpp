#include "monopole/charge2.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "monopole/error.hpp"
#include "monopole/polyroots.hpp"

namespace monopole {

namespace {

constexpr double kBranchTol = 1e-7;
constexpr double kOnCurveTol = 1e-9;

void require_charge2(int k, const char* what) {
  if (k != 2)
    throw MonopoleError("charge2", "InvalidCharge",
                        std::string(what) + " needs charge 2, got k = " + std::to_string(k));
}

// 2x2 unitary u with u a = y and u conj(b) = conj(y), given a^T b = y^T y.
Mat2c symmetric_unitary(const Eigen::Vector2cd& a, const Eigen::Vector2cd& b,
                        const Eigen::Vector2cd& y) {
  auto perp = [](const Eigen::Vector2cd& x) {
    return Eigen::Vector2cd(-std::conj(x(1)), std::conj(x(0)));
  };
  const Eigen::Vector2cd src2 = b.conjugate();
  const Eigen::Vector2cd dst2 = y.conjugate();
  const Complex overlap = a.dot(src2);
  Eigen::Vector2cd f = src2 - overlap * a;
  Eigen::Vector2cd g = dst2 - y.dot(dst2) * y;
  Mat2c src, dst;
  if (f.norm() < 1e-12 || g.norm() < 1e-12) {
    src << a, perp(a);
    dst << y, perp(y);
  } else {
    src << a, f.normalized();
    dst << y, g.normalized();
  }
  return dst * src.adjoint();
}

CVector vertical_coeffs(const SpectralMatrix& s, const SpherePoint& w) {
  return s.psi.transpose() * monomials(negative_inverse(w), s.k);
}

CVector horizontal_coeffs(const SpectralMatrix& s, const SpherePoint& z) {
  return s.psi * monomials(z, s.k);
}

// The root of a quadratic farther from `current`, failing at a double root.
SpherePoint other_root(const CVector& coeffs, const SpherePoint& current, const char* where) {
  const std::vector<SpherePoint> roots = projective_roots(coeffs);
  if (roots.size() != 2)
    throw MonopoleError("charge2", "BranchPoint",
                        std::string(where) + ": line is contained in the curve");
  if (chordal_distance(roots[0], roots[1]) < kBranchTol)
    throw MonopoleError("charge2", "BranchPoint",
                        std::string(where) + ": double root (tangency)");
  return chordal_distance(roots[0], current) >= chordal_distance(roots[1], current) ? roots[0]
                                                                                   : roots[1];
}

double product_distance(const CurvePoint& a, const CurvePoint& b) {
  return std::max(chordal_distance(a.w, b.w), chordal_distance(a.z, b.z));
}

}  // namespace

M2Residual m2_residual(const CoeffTuple& t) {
  require_charge2(t.k, "M2 constraints");
  const double scale = std::max(t.v.squaredNorm(), 1e-300);
  M2Residual r;
  r.norms = std::abs(t.v.col(0).squaredNorm() - t.v.col(2).squaredNorm()) / scale;
  r.pairing = std::abs(t.v.col(0).dot(t.v.col(1)) + t.v.col(1).dot(t.v.col(2))) / scale;
  return r;
}

CoeffTuple from_su2_triple(const Su2Triple& nu) {
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix v(3, 3);
  for (int i = 0; i < 3; ++i) {
    v(i, 0) = s * Complex(nu.r(i, 0), nu.r(i, 2));
    v(i, 1) = nu.r(i, 1);
    v(i, 2) = s * Complex(-nu.r(i, 0), nu.r(i, 2));
  }
  return CoeffTuple(v);
}

Su2Triple to_su2_triple(const CoeffTuple& t, double tol) {
  require_charge2(t.k, "to_su2_triple");
  const M2Residual res = m2_residual(t);
  if (res.norms > tol || res.pairing > tol)
    throw MonopoleError("charge2", "ConstraintViolated",
                        "M2 constraints fail (norms " + std::to_string(res.norms) +
                            ", pairing " + std::to_string(res.pairing) + ")");
  if (fullness(t) <= 1e-12) throw MonopoleError("charge2", "NotFull", "triple has rank < 3");

  // Unitary sending v1 to |v1| e1.
  const CVector x = t.v.col(1).normalized();
  Eigen::HouseholderQR<CMatrix> qr(x);
  CMatrix basis = qr.householderQ() * CMatrix::Identity(3, 3);
  basis.col(0) = x;
  CMatrix u = basis.adjoint();
  CMatrix xi = u * t.v;

  const Eigen::Vector2cd xi0 = xi.col(0).tail(2);
  const Eigen::Vector2cd xi2 = xi.col(2).tail(2);
  const double rho = xi0.norm();
  if (rho > 1e-14 * t.v.norm()) {
    const Eigen::Vector2cd a = xi2 / rho;
    const Eigen::Vector2cd b = -xi0.conjugate() / rho;
    const Complex gamma = a.transpose() * b;
    const double chi = std::arg(gamma) / 2.0;
    const double phi = std::acos(std::min(1.0, std::abs(gamma))) / 2.0;
    const Eigen::Vector2cd y =
        std::polar(1.0, chi) * Eigen::Vector2cd(std::cos(phi), kI * std::sin(phi));
    CMatrix lift = CMatrix::Identity(3, 3);
    lift.bottomRightCorner(2, 2) = symmetric_unitary(a, b, y);
    u = lift * u;
    xi = u * t.v;
  }
  if ((xi.col(2) + xi.col(0).conjugate()).norm() > 1e-8 * t.v.norm())
    throw MonopoleError("charge2", "ConstraintViolated", "could not reach the real slice");

  Su2Triple nu;
  const double s = std::sqrt(2.0);
  nu.r.col(0) = s * xi.col(0).real();
  nu.r.col(1) = xi.col(1).real();
  nu.r.col(2) = s * xi.col(0).imag();
  return nu;
}

Su2Triple bracket(const Su2Triple& nu) {
  Su2Triple out;
  out.r.col(0) = nu[1].cross(nu[2]);
  out.r.col(1) = nu[2].cross(nu[0]);
  out.r.col(2) = nu[0].cross(nu[1]);
  return out;
}

Su2Triple bracket_fixed_direction(const Su2Triple& nu, double tol, int max_iter) {
  Su2Triple x = nu;
  for (int iter = 0; iter < max_iter; ++iter) {
    const double det = x.triple_product();
    if (std::abs(det) <= 1e-14 * std::pow(x.r.norm(), 3))
      throw MonopoleError("charge2", "NotFull", "coplanar triple has no fixed direction");
    Su2Triple next;
    next.r = 0.5 * (x.r + bracket(x).r / det);
    const double change = (next.r - x.r).norm() / x.r.norm();
    x = next;
    if (change <= tol) return x;
  }
  throw MonopoleError("charge2", "NoConvergence", "bracket iteration did not settle",
                      ErrorKind::NonConvergence);
}

std::array<Complex, 5> diagonal_quartic(const Su2Triple& nu) {
  const Vec3 r0 = nu[0], r1 = nu[1], r2 = nu[2];
  const double g00 = r0.dot(r0), g11 = r1.dot(r1), g22 = r2.dot(r2);
  const double g01 = r0.dot(r1), g02 = r0.dot(r2), g12 = r1.dot(r2);
  return {0.5 * Complex(g22 - g00, 2.0 * g02), 2.0 * Complex(g01, -g12),
          Complex(g00 + g22 - 2.0 * g11), -2.0 * Complex(g01, g12),
          0.5 * Complex(g22 - g00, -2.0 * g02)};
}

MassFlowReport mass_flow_check(const Su2Triple& nu, double step) {
  MassFlowReport report;
  report.full = std::abs(nu.triple_product()) > 1e-12 * std::pow(nu.r.norm(), 3);
  const Su2Triple dir = bracket(nu);
  const auto c0 = diagonal_quartic(nu);
  auto slope = [&](double h) {
    Su2Triple moved;
    moved.r = nu.r + h * dir.r;
    const auto c = diagonal_quartic(moved);
    std::array<Complex, 5> d;
    for (int i = 0; i < 5; ++i) d[i] = (c[i] - c0[i]) / h;
    return d;
  };
  const auto d1 = slope(step);
  const auto d2 = slope(step / 10.0);
  for (int i = 0; i < 5; ++i) {
    report.slope_h[i] = std::abs(d1[i]);
    report.slope_h10[i] = std::abs(d2[i]);
    report.extrapolated[i] = std::abs((10.0 * d2[i] - d1[i]) / 9.0);
    report.max_extrapolated = std::max(report.max_extrapolated, report.extrapolated[i]);
  }
  report.invariant = report.max_extrapolated < 1e-8;
  return report;
}

ZLattice z_lattice(const HoloSphere& q, const SpherePoint& z0, int max_steps, double tol) {
  require_charge2(q.k, "z_lattice");
  auto successors = [&](const SpherePoint& z) {
    const CVector coeffs = (eval_sphere(q, z).adjoint() * q.Q).transpose();
    const std::vector<SpherePoint> roots = projective_roots(coeffs);
    if (roots.size() != 2 || chordal_distance(roots[0], roots[1]) < kBranchTol)
      throw MonopoleError("charge2", "BranchPoint", "pairing has a double root");
    return roots;
  };

  ZLattice lattice;
  lattice.points.push_back(z0);
  const auto first = successors(z0);
  lattice.first_roots = {first[0], first[1]};
  auto ratio_arg = [&](const SpherePoint& r) {
    const Complex num = r.z1() * z0.z0();
    const Complex den = r.z0() * z0.z1();
    if (std::abs(num) == 0.0 || std::abs(den) == 0.0) return 0.0;
    return std::arg(num / den);
  };
  lattice.points.push_back(ratio_arg(first[0]) <= ratio_arg(first[1]) ? first[0] : first[1]);

  for (int i = 1;; ++i) {
    if (chordal_distance(lattice.points[i], z0) < tol) {
      lattice.points.pop_back();
      lattice.closed = true;
      lattice.period = i;
      return lattice;
    }
    if (i >= max_steps) break;
    const auto roots = successors(lattice.points[i]);
    const SpherePoint& prev = lattice.points[i - 1];
    lattice.points.push_back(chordal_distance(roots[0], prev) >= chordal_distance(roots[1], prev)
                                 ? roots[0]
                                 : roots[1]);
  }
  throw PartialResultError<ZLattice>("charge2", "NoClosure",
                                     "no return within " + std::to_string(max_steps) + " steps",
                                     lattice);
}

CurvePoint point_over(const SpectralMatrix& s, const SpherePoint& w) {
  const std::vector<SpherePoint> roots = projective_roots(vertical_coeffs(s, w));
  if (roots.empty())
    throw MonopoleError("charge2", "BranchPoint", "vertical line is contained in the curve");
  return {w, roots.front()};
}

PSequence p_sequence(const SpectralMatrix& s, const CurvePoint& p0, int max_steps, double tol) {
  require_charge2(s.k, "p_sequence");
  const double r0 = normalized_psi_residual(s, p0.w, p0.z);
  if (r0 > kOnCurveTol)
    throw MonopoleError("charge2", "NotOnCurve",
                        "starting point residual " + std::to_string(r0));
  PSequence seq;
  seq.points.push_back(p0);
  seq.max_residual = r0;
  for (int i = 1; i <= max_steps; ++i) {
    const CurvePoint& cur = seq.points.back();
    CurvePoint next = cur;
    if (i % 2 == 1)
      next.z = other_root(vertical_coeffs(s, cur.w), cur.z, "vertical step");
    else
      next.w = negative_inverse(
          other_root(horizontal_coeffs(s, cur.z), negative_inverse(cur.w), "horizontal step"));
    const double r = normalized_psi_residual(s, next.w, next.z);
    seq.max_residual = std::max(seq.max_residual, r);
    if (r > kOnCurveTol)
      throw MonopoleError("charge2", "NotOnCurve",
                          "point " + std::to_string(i) + " drifted off the curve (" +
                              std::to_string(r) + ")");
    if (product_distance(next, p0) < tol) {
      seq.closed = true;
      seq.period = i;
      return seq;
    }
    seq.points.push_back(next);
  }
  throw PartialResultError<PSequence>("charge2", "NoClosure",
                                      "no return within " + std::to_string(max_steps) + " steps",
                                      seq);
}

MassEstimate estimate_mass(const SpectralMatrix& s, int max_steps) {
  require_charge2(s.k, "estimate_mass");
  const Complex starts[] = {{0.31, 0.73}, {-1.17, 0.42}, {0.58, -0.91}};
  int period = 0;
  for (const Complex w : starts) {
    int n = 0;
    try {
      n = p_sequence(s, point_over(s, w), max_steps).period;
    } catch (const MonopoleError& e) {
      throw MonopoleError("charge2", "NoEstimate",
                          std::string("P-sequence failed: ") + e.what());
    }
    if (period != 0 && n != period)
      throw MonopoleError("charge2", "NoEstimate",
                          "starting points disagree on the period (" + std::to_string(period) +
                              " vs " + std::to_string(n) + ")");
    period = n;
  }
  return {(period - 4) / 4.0, period};
}

bool swap_symmetric(const SpectralMatrix& s, double tol) {
  // w^k psi(w, z) = sum_ij (JD Psi)_ij w^i z^j up to sign.
  const int n = s.k + 1;
  CMatrix b(n, n);
  for (int i = 0; i < n; ++i) {
    const int src = s.k - i;
    b.row(i) = (src % 2 == 0 ? 1.0 : -1.0) * s.psi.row(src);
  }
  const CMatrix bt = b.transpose();
  const Complex c = bt.conjugate().cwiseProduct(b).sum() / b.squaredNorm();
  return (b - c * bt).norm() <= tol * b.norm() && std::abs(std::abs(c) - 1.0) <= tol;
}

PonceletPolygon poncelet(const SpectralMatrix& s, const CurvePoint& p0, int steps) {
  require_charge2(s.k, "poncelet");
  if (!swap_symmetric(s))
    throw MonopoleError("charge2", "NotCentred",
                        "curve is not invariant under swapping the two factors");
  PSequence seq;
  try {
    seq = p_sequence(s, p0, steps);
  } catch (const PartialResultError<PSequence>& e) {
    seq = e.partial();
  }
  PonceletPolygon poly;
  poly.closed = seq.closed;
  poly.period = seq.period;
  for (const CurvePoint& p : seq.points) {
    if (p.w.is_infinity() || p.z.is_infinity())
      throw MonopoleError("charge2", "ConicFitFailed", "vertex at infinity in the affine chart");
    const Complex w = p.w.chart(), z = p.z.chart();
    poly.u.push_back(w * z);
    poly.v.push_back(w + z);
  }
  const int n = static_cast<int>(poly.u.size());
  if (n < 5)
    throw MonopoleError("charge2", "ConicFitFailed",
                        "need at least 5 vertices, have " + std::to_string(n));

  auto row = [&](int i) {
    const Complex u = poly.u[i], v = poly.v[i];
    Eigen::Matrix<Complex, 1, 6> r;
    r << u * u, u * v, v * v, u, v, 1.0;
    return r;
  };
  CMatrix design(n, 6);
  for (int i = 0; i < n; ++i) design.row(i) = row(i);
  Eigen::JacobiSVD<CMatrix> svd(design, Eigen::ComputeFullV);
  poly.conic = svd.matrixV().col(5);
  for (int i = 0; i < n; ++i) {
    const Eigen::Matrix<Complex, 1, 6> r = row(i);
    poly.vertex_residual =
        std::max(poly.vertex_residual, std::abs((r * poly.conic)(0)) / r.norm());
  }
  if (!(poly.vertex_residual < 1e-8))
    throw MonopoleError("charge2", "ConicFitFailed",
                        "vertices are not on a common conic (residual " +
                            std::to_string(poly.vertex_residual) + ")");

  // Dual of B: X1^2 - 4 X0 X2 in (X0, X1, X2) = (1, v, u).
  Eigen::Matrix3cd dual;
  dual << 0.0, 0.0, -0.5, 0.0, 1.0, 0.0, -0.5, 0.0, 0.0;
  const int edges = poly.closed ? n : n - 1;
  for (int i = 0; i < edges; ++i) {
    const int j = (i + 1) % n;
    const Eigen::Vector3cd a(1.0, poly.v[i], poly.u[i]);
    const Eigen::Vector3cd b(1.0, poly.v[j], poly.u[j]);
    const Eigen::Vector3cd line = a.cross(b);
    const Complex q = line.transpose() * dual * line;
    poly.tangency_residual = std::max(poly.tangency_residual, std::abs(q) / line.squaredNorm());
  }
  return poly;
}

void write_polygon_csv(std::ostream& out, const PonceletPolygon& poly) {
  out << "re_u,im_u,re_v,im_v\n";
  out.precision(15);
  for (std::size_t i = 0; i < poly.u.size(); ++i)
    out << poly.u[i].real() << ',' << poly.u[i].imag() << ',' << poly.v[i].real() << ','
        << poly.v[i].imag() << '\n';
}

}  // namespace monopole
