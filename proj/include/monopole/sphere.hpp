#pragma once

// The holomorphic sphere q(z) = Q v(z) attached to a positive definite
// coefficient matrix Psi = Q^* Q, and its GIT coordinates
// q(z) = sum_j sqrt(C(k,j)) v_j z^j.

#include "monopole/curve.hpp"
#include "monopole/types.hpp"

namespace monopole {

struct HoloSphere {
  int k = 0;
  CMatrix Q;
  /// True when Q is upper triangular with positive real diagonal.
  bool canonical = false;

  HoloSphere() = default;
  /// Throws sphere.InvalidShape unless Q is square of size >= 2.
  HoloSphere(CMatrix q_matrix, bool is_canonical);
};

/// Columns of v are v_0, ..., v_k; each lives in C^{k+1}.
struct CoeffTuple {
  int k = 0;
  CMatrix v;

  CoeffTuple() = default;
  explicit CoeffTuple(CMatrix columns);
};

/// Cholesky slice of the U(k+1) ambiguity: Q upper triangular with positive
/// diagonal and Q^* Q = Psi.
/// Errors: sphere.NotPositiveDefinite, curve_core.NotHermitian.
HoloSphere factor_sphere(const SpectralMatrix& s);

SpectralMatrix spectral_from_sphere(const HoloSphere& q);

/// Replaces Q by the canonical representative of its U(k+1) orbit.
HoloSphere canonicalize(const HoloSphere& q);

/// Q v(z) on the representative of z; at infinity this is Q e_k.
CVector eval_sphere(const HoloSphere& q, const SpherePoint& z);

/// k-th derivative of z -> Q v(z) in the affine chart (finite z only).
CVector eval_sphere_derivative(const HoloSphere& q, Complex z, int order);

/// conj(q(what))^T q(z) with the conjugation folded through the antipode:
/// v(-1/w)^T Q^* Q v(z). Holomorphic in both arguments and equal to eval_psi.
Complex pairing(const HoloSphere& q, const SpherePoint& w, const SpherePoint& z);

/// v_j = column_j(Q) / sqrt(C(k,j)).
CoeffTuple sphere_to_tuple(const HoloSphere& q);

/// Inverse of sphere_to_tuple; the resulting Q is generally not canonical.
/// Errors: sphere.NotFull when the assembled matrix is singular.
HoloSphere tuple_to_sphere(const CoeffTuple& t);

/// Smallest singular value over largest of the matrix with columns v_j.
double fullness(const CoeffTuple& t);

}  // namespace monopole
