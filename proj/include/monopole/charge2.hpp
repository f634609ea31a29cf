#pragma once

// Charge-2 structure: the centred moduli M_2 as triples in C^3 and as
// su(2) (x) su(2) data, the bracket involution and mass flow, and the
// discrete dynamics (z-lattice, P-sequence, Poncelet polygons) whose closure
// detects rational mass.

#include <array>
#include <iosfwd>
#include <vector>

#include "monopole/curve.hpp"
#include "monopole/sphere.hpp"
#include "monopole/types.hpp"

namespace monopole {

/// (r0, r1, r2) stored as the columns of a real 3x3 matrix.
struct Su2Triple {
  Eigen::Matrix3d r = Eigen::Matrix3d::Identity();

  Vec3 operator[](int i) const { return r.col(i); }
  /// <r0, r1 x r2>
  double triple_product() const { return r.determinant(); }
};

/// Residuals of |v0|^2 = |v2|^2 and (v0, v1) + (v1, v2) = 0, relative to norm2.
struct M2Residual {
  double norms = 0.0;
  double pairing = 0.0;
};
M2Residual m2_residual(const CoeffTuple& t);

/// ((r0 + i r2)/sqrt2, r1, (-r0 + i r2)/sqrt2).
CoeffTuple from_su2_triple(const Su2Triple& nu);

/// Moves t by a unitary into the slice (v0, v1, -conj v0) with v1 real and
/// reads off (r0, r1, r2). Determined up to O(3), so compare Gram matrices.
/// Errors: charge2.ConstraintViolated, charge2.NotFull, charge2.InvalidCharge.
Su2Triple to_su2_triple(const CoeffTuple& t, double tol = 1e-10);

/// (r1 x r2, r2 x r0, r0 x r1); bracket(bracket(nu)) = <r0, r1 x r2> nu.
Su2Triple bracket(const Su2Triple& nu);

/// Iterates nu -> (nu + bracket(nu) / <r0, r1 x r2>) / 2 to a fixed direction
/// of the bracket. From any full triple this lands on an orthonormal triple.
/// Errors: charge2.NotFull, charge2.NoConvergence.
Su2Triple bracket_fixed_direction(const Su2Triple& nu, double tol = 1e-14, int max_iter = 100);

/// Coefficients (z^4, z^3, z^2, z^1, z^0) of the polynomial whose roots are the
/// intersections of the spectral curve with the diagonal w = z.
std::array<Complex, 5> diagonal_quartic(const Su2Triple& nu);

struct MassFlowReport {
  std::array<double, 5> slope_h{};       // |forward difference| at step h
  std::array<double, 5> slope_h10{};     // at step h/10
  std::array<double, 5> extrapolated{};  // Richardson limit
  double max_extrapolated = 0.0;
  bool full = true;  // false for coplanar input
  bool invariant = false;
};

/// First-order invariance of diagonal_quartic along nu + t bracket(nu).
MassFlowReport mass_flow_check(const Su2Triple& nu, double step = 1e-3);

struct ZLattice {
  std::vector<SpherePoint> points;
  bool closed = false;
  int period = 0;
  /// Both candidate successors of z0; points[1] is the chosen one.
  std::array<SpherePoint, 2> first_roots{SpherePoint(0.0), SpherePoint(0.0)};
};

/// z_{i+1} is the root of <q(z_i), q(.)> other than z_{i-1}; at the first step
/// the root with the smaller principal arg(z1 / z0) is taken.
/// Errors: charge2.BranchPoint, charge2.NoClosure (PartialResultError<ZLattice>).
ZLattice z_lattice(const HoloSphere& q, const SpherePoint& z0, int max_steps,
                   double tol = 1e-8);

struct CurvePoint {
  SpherePoint w;
  SpherePoint z;
};

struct PSequence {
  std::vector<CurvePoint> points;
  bool closed = false;
  int period = 0;
  double max_residual = 0.0;
};

/// Alternately replaces z (other root on the vertical line through the point)
/// and w (other root on the horizontal line).
/// Errors: charge2.NotOnCurve, charge2.BranchPoint, charge2.NoClosure
/// (PartialResultError<PSequence>).
PSequence p_sequence(const SpectralMatrix& s, const CurvePoint& p0, int max_steps,
                     double tol = 1e-8);

/// Point of the curve above w: a root of psi(w, .).
CurvePoint point_over(const SpectralMatrix& s, const SpherePoint& w);

struct MassEstimate {
  double mass = 0.0;
  int period = 0;
};

/// m = (N - 4) / 4 from the P-sequence period, agreed on from three starts.
/// Errors: charge2.NoEstimate.
MassEstimate estimate_mass(const SpectralMatrix& s, int max_steps = 200);

struct PonceletPolygon {
  std::vector<Complex> u;  // u = w z
  std::vector<Complex> v;  // v = w + z
  Eigen::Matrix<Complex, 6, 1> conic;  // coefficients of u^2, uv, v^2, u, v, 1
  double vertex_residual = 0.0;
  double tangency_residual = 0.0;
  bool closed = false;
  int period = 0;
};

/// True when psi(w, z) is a unit multiple of psi(z, w).
bool swap_symmetric(const SpectralMatrix& s, double tol = 1e-10);

/// Image of the P-sequence under (w, z) -> (wz, w + z), the conic through its
/// vertices and the tangency of its edges to B = {v^2 = 4u}.
/// Errors: charge2.NotCentred, charge2.ConicFitFailed, plus p_sequence errors.
PonceletPolygon poncelet(const SpectralMatrix& s, const CurvePoint& p0, int steps);

void write_polygon_csv(std::ostream& out, const PonceletPolygon& poly);

}  // namespace monopole
