#pragma once

// The axially symmetric centred charge-2 field in the gauge given by a
// Hermitian metric H(z, r), its gauge fields, and finite-difference checks of
// the Bogomolny equation
//   d_r(H^-1 d_r H) + ((1+|z|^2)^2 / sinh^2 r) d_zbar(H^-1 d_z H) = 0.

#include <functional>
#include <string>
#include <vector>

#include "monopole/sphere.hpp"
#include "monopole/types.hpp"

namespace monopole {

struct AxialField {
  std::string name;
  std::function<double(double)> a;
  std::function<double(double)> b;
};

/// a = b = sech r: an exact solution of mass 1/2.
AxialField sech_field();
/// a = exp(-2r), b = 0: solves only a degenerate zero-mass equation.
AxialField zero_mass_field();
AxialField constant_field(double a, double b);

/// Errors: axial_field.DomainViolation (r <= 0, a <= 0, |b| > 1 or D <= 0).
Mat2c H_matrix(const AxialField& f, Complex z, double r);

struct GaugeSample {
  Mat2c a_z;
  Mat2c a_r;
  Mat2c phi;
  /// Richardson error estimate (h versus h/2) on H^-1 d_z H and H^-1 d_r H.
  double err_z = 0.0;
  double err_r = 0.0;
};

/// A_z = H^-1 d_z H, A_r = H^-1 d_r H / 2, Phi = -(i/2) H^-1 d_r H, all from
/// central differences of step `step`.
GaugeSample gauge_fields(const AxialField& f, Complex z, double r, double step = 1e-4);

/// Frobenius norm of the Bogomolny residual at one point, by nested central
/// differences of step `step`.
double bog_residual_at(const AxialField& f, Complex z, double r, double step);

struct FieldGrid {
  double r_min = 0.2;
  double r_max = 4.0;
  int n_r = 20;
  double z_max = 2.0;
  int n_rho = 5;
  int n_theta = 8;

  /// (z, r) points: z = 0 plus n_rho x n_theta polar points with
  /// 0 < |z| <= z_max, on n_r radii in [r_min, r_max].
  std::vector<std::pair<Complex, double>> points() const;
};

struct ResidualPoint {
  Complex z;
  double r = 0.0;
  double residual = 0.0;
};

struct ResidualReport {
  double max_frobenius = 0.0;
  std::vector<ResidualPoint> per_point;
};

ResidualReport bog_residual(const AxialField& f, const FieldGrid& grid, double step = 1e-3);

/// sqrt(-tr(Phi(0, r)^2) / 2) on the axis.
std::vector<double> mass_profile(const AxialField& f, const std::vector<double>& r_list,
                                 double step = 1e-4);

/// q(z) = ((1+z)/sqrt2, i(1-z)/sqrt2, z^2), the sphere of the sech field.
HoloSphere sphere_of_sech_raw();
/// Its canonical representative.
HoloSphere sphere_of_sech();

}  // namespace monopole
