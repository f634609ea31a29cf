#pragma once

// Bidegree-(k,k) curves on P^1 x P^1 through their coefficient matrices.
//
// Convention: psi(w, z) = sum_{i,j} Psi_ij (-1/w)^i z^j, i.e. the pairing
// v(-1/w)^T Psi v(z) with v(z) = (1, z, ..., z^k). The w-factor is therefore
// evaluated in the chart u = -1/w. With this choice the reality condition
// psi(zhat, what) = conj(psi(w, z)) is exactly Psi = Psi^*, and the
// restriction to the antidiagonal w = zhat is v(z)^* Psi v(z).

#include <vector>

#include "monopole/types.hpp"

namespace monopole {

/// A point of P^1 in homogeneous coordinates (z0 : z1); the affine chart
/// value is z = z1 / z0, and infinity is (0 : 1).
class SpherePoint {
 public:
  SpherePoint(Complex z) : z0_(1.0), z1_(z) {}  // NOLINT: implicit from chart value
  SpherePoint(double z) : z0_(1.0), z1_(z) {}   // NOLINT

  static SpherePoint homogeneous(Complex z0, Complex z1);
  static SpherePoint infinity() { return homogeneous(0.0, 1.0); }

  Complex z0() const { return z0_; }
  Complex z1() const { return z1_; }

  bool is_infinity() const { return z0_ == Complex(0.0); }
  /// Chart value z1/z0. Must not be called at infinity.
  Complex chart() const;

  /// Representative (1, z) for finite points and (0, 1) at infinity. All
  /// degree-k evaluations in this library use this representative, so values
  /// at infinity are the top homogeneous component.
  SpherePoint representative() const;

 private:
  SpherePoint(Complex z0, Complex z1, int) : z0_(z0), z1_(z1) {}
  Complex z0_;
  Complex z1_;
};

/// -1/conj(p): (z0 : z1) -> (-conj(z1) : conj(z0)).
SpherePoint antipode(const SpherePoint& p);

/// -1/p: (z0 : z1) -> (z1 : -z0). This is the chart in which psi is
/// polynomial in the w-factor.
SpherePoint negative_inverse(const SpherePoint& p);

/// sin of the angle between the two lines in C^2 (0 = same point, 1 = antipodal).
double chordal_distance(const SpherePoint& a, const SpherePoint& b);

/// (z0^{k-j} z1^j)_{j=0..k} evaluated on the representative.
CVector monomials(const SpherePoint& p, int k);

struct SpectralMatrix {
  int k = 0;
  CMatrix psi;
  bool normalized = false;
  /// Set for the degenerate m = 0 axial curves and massless C_f curves.
  bool massless = false;

  SpectralMatrix() = default;
  /// Throws curve_core.InvalidShape unless psi is square and at least 2x2.
  explicit SpectralMatrix(CMatrix psi_matrix, bool is_normalized = false);
};

/// Relative tolerances shared by the reality / Hermiticity checks.
inline constexpr double kHermitianTol = 1e-10;

/// psi(w, z) in the affine charts; requires w != 0.
Complex eval_psi_chart(const SpectralMatrix& s, Complex w, Complex z);

/// psi(w, z) on representatives: m(-1/w)^T Psi m(z). Agrees with the chart
/// value whenever -1/w and z are finite.
Complex eval_psi(const SpectralMatrix& s, const SpherePoint& w, const SpherePoint& z);

/// |psi(w,z)| divided by ||Psi|| and the norms of both monomial vectors, so
/// that on-curve tests are scale free.
double normalized_psi_residual(const SpectralMatrix& s, const SpherePoint& w,
                               const SpherePoint& z);

/// The antidiagonal panel used by every positivity test: 0, infinity and
/// 64 Chebyshev-spaced angles on each of the circles |z| = 1/2, 1, 2.
std::vector<SpherePoint> antidiagonal_panel();

/// v(z)^* Psi v(z) / (||Psi|| |v(z)|^2); real for Hermitian Psi.
Complex antidiagonal_value(const SpectralMatrix& s, const SpherePoint& z);

/// Rescales a curve whose zero set is invariant under (w,z) -> (zhat, what)
/// by a unit complex number so that Psi is Hermitian and positive on the
/// antidiagonal.
/// Errors: curve_core.NotRealCurve, curve_core.VanishesOnAntidiagonal.
SpectralMatrix normalize_reality(const SpectralMatrix& raw);

struct PositivityReport {
  bool positive_definite = false;
  std::vector<double> eigenvalues;  // ascending
};

/// Errors: curve_core.NotHermitian.
PositivityReport positivity_check(const SpectralMatrix& s);

struct NondegeneracyReport {
  Complex determinant;
  double condition_estimate = 0.0;  // sigma_max / sigma_min (inf when singular)
  bool degenerate = false;
};

NondegeneracyReport nondegeneracy_check(const SpectralMatrix& s);

/// Axially symmetric spectral curve prod_j (w - a_j z) with
/// a_j = alpha exp(2 pi i j / (k + 2m)), j = (1-k)/2, ..., (k-1)/2.
/// Psi is diagonal with Psi_jj = e_j(a). m = 0 gives the massless curve
/// w^k + (-1)^k alpha^k z^k and sets the massless flag.
SpectralMatrix axial_spectral(int k, double mass, double alpha = 1.0);

/// Roots a_j of the axial curve, in the order j = (1-k)/2, ..., (k-1)/2.
std::vector<Complex> axial_roots(int k, double mass, double alpha = 1.0);

}  // namespace monopole
