#pragma once

// Rational maps f_w obtained by projecting the holomorphic sphere onto a line
// through q(w), and the massless curves C_f built from rational maps.

#include <vector>

#include "monopole/curve.hpp"
#include "monopole/sphere.hpp"
#include "monopole/types.hpp"

namespace monopole {

/// f(z) = scale * num(z) / den(z); num and den are coefficient vectors in
/// increasing powers of z, each normalised so its largest coefficient is 1.
struct RationalMap {
  CVector num;
  CVector den;
  Complex scale{1.0};

  /// Formal degree max(len) - 1.
  int formal_degree() const;
  /// Actual degree as a map of P^1: max of the true polynomial degrees
  /// (equal to the formal degree unless both leading coefficients vanish).
  int degree() const;
  /// Value in P^1 as (den : scale * num).
  SpherePoint operator()(const SpherePoint& z) const;
};

/// Orthonormal pair spanning a 2-plane in C^{k+1}; u1 is parallel to q(w).
struct ProjLine {
  CVector u1;
  CVector u2;
};

/// Roots in z of conj(q(w))^T q(z), with multiplicity, including roots at
/// infinity when the polynomial drops degree.
std::vector<SpherePoint> spectral_slice(const HoloSphere& q, const SpherePoint& w);

/// f_w = pi_L o q: num = <u2, q(z)>, den = <u1, q(z)>, so that w is a zero and
/// the poles are the spectral slice.
/// Errors: ratmap.LineNotThroughQw.
RationalMap project_map(const HoloSphere& q, const SpherePoint& w, const ProjLine& line);

/// Any unit u2 orthogonal to q(w) completes a line through q(w).
ProjLine line_through(const HoloSphere& q, const SpherePoint& w, const CVector& direction);

struct LineResult {
  ProjLine line;
  int iterations = 0;
  double angle = 0.0;  // last change of the line
};

/// Self-consistent line: start from the orthocomplement of q(w) inside
/// span{q(w), q(what)}, then repeatedly replace u2 by the normal of
/// span{q(w_1), ..., q(w_k)} over the zeros w_i of the current map (using
/// derivative vectors at repeated zeros) until the line stops moving.
/// Errors: ratmap.NoConvergence (PartialResultError carrying the last line).
LineResult find_line(const HoloSphere& q, const SpherePoint& w, double tol = 1e-12,
                     int max_iter = 50);

/// Zeros of the map's numerator in P^1.
std::vector<SpherePoint> map_zeros(const RationalMap& f);
/// Zeros of the map's denominator in P^1.
std::vector<SpherePoint> map_poles(const RationalMap& f);

/// Coefficient matrix of C_f = {<f(what), f(z)> = 0} for f = [den : num],
/// i.e. M^* M where the rows of M are the coefficients of den and num.
/// Checks bidegree (N, N) and the absence of points on the antidiagonal.
/// Errors: ratmap.DegreeZero, ratmap.RealPointFound.
SpectralMatrix massless_curve(const RationalMap& f);

}  // namespace monopole
