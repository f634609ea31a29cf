#pragma once

// Boundary data of the monopole: the Hermitian metric h(z) = v(z)^* Psi v(z)
// on O(-k), its unitary-gauge connection and curvature, and the inverse map
// from metric samples back to Psi.

#include <iosfwd>
#include <utility>
#include <vector>

#include "monopole/curve.hpp"
#include "monopole/types.hpp"

namespace monopole {

/// z-chart, or the chart zeta = 1/z around infinity. In the latter the metric
/// is computed from J Psi J (J the reversal permutation), i.e. h is divided by
/// the transition factor |z|^{2k}.
enum class Chart { Z, InvZ };

double metric_h(const SpectralMatrix& s, Complex z, Chart chart = Chart::Z);

struct ConnectionSample {
  Complex z;
  Complex a_z;     // d_z ln sqrt(h)
  Complex a_zbar;  // -conj(a_z)
  double f_density = 0.0;  // d_z d_zbar ln h, against (i/2) dz ^ dzbar
};

/// Analytic A_z and curvature density; h is a polynomial in z and conj(z).
ConnectionSample connection_at_infinity(const SpectralMatrix& s, Complex z,
                                        Chart chart = Chart::Z);

struct DegreeReport {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// (1/pi) times the integral of the curvature density over the sphere, split
/// into |z| < split_radius and |1/z| < 1/split_radius. The angular integral is
/// periodic trapezoid with doubling, the radial one Gauss-Kronrod.
/// Errors: boundary.NotPositiveDefinite, boundary.QuadratureNotConverged.
DegreeReport degree_integral(const SpectralMatrix& s, double split_radius = 1.0,
                             double tol = 1e-7);

struct MetricSample {
  Complex z;
  double h = 0.0;
};

struct Reconstruction {
  SpectralMatrix psi;
  double residual = 0.0;  // relative rms misfit of h over the samples
  int rank = 0;
};

/// Least-squares fit of a Hermitian Psi to h(z_s) = sum Psi_ij conj(z_s)^i z_s^j,
/// parameterised by (k+1)^2 real unknowns.
/// Errors: boundary.Underdetermined, boundary.NotPositive.
Reconstruction reconstruct_psi_from_metric(const std::vector<MetricSample>& samples, int k);

/// Rows "re_z,im_z,h,re_Az,im_Az,F" on an n x n grid over [-extent, extent]^2.
void write_boundary_csv(std::ostream& out, const SpectralMatrix& s, int n, double extent);

}  // namespace monopole
