#include "monopole/axial_field.hpp"

#include <algorithm>
#include <cmath>

#include "monopole/error.hpp"

namespace monopole {

namespace {

Mat2c log_derivative(const Mat2c& h, const Mat2c& dh) { return h.inverse() * dh; }

// H^-1 d_z H with d_z = (d_x - i d_y) / 2.
Mat2c dz_log(const AxialField& f, Complex z, double r, double h) {
  const Mat2c hx = (H_matrix(f, z + h, r) - H_matrix(f, z - h, r)) / (2.0 * h);
  const Mat2c hy =
      (H_matrix(f, z + kI * h, r) - H_matrix(f, z - kI * h, r)) / (2.0 * h);
  return log_derivative(H_matrix(f, z, r), 0.5 * (hx - kI * hy));
}

Mat2c dr_log(const AxialField& f, Complex z, double r, double h) {
  const Mat2c hr = (H_matrix(f, z, r + h) - H_matrix(f, z, r - h)) / (2.0 * h);
  return log_derivative(H_matrix(f, z, r), hr);
}

}  // namespace

AxialField sech_field() {
  auto sech = [](double r) { return 1.0 / std::cosh(r); };
  return {"sech", sech, sech};
}

AxialField zero_mass_field() {
  return {"zero_mass", [](double r) { return std::exp(-2.0 * r); }, [](double) { return 0.0; }};
}

AxialField constant_field(double a, double b) {
  return {"constant", [a](double) { return a; }, [b](double) { return b; }};
}

Mat2c H_matrix(const AxialField& f, Complex z, double r) {
  if (!(r > 0.0))
    throw MonopoleError("axial_field", "DomainViolation", "r must be positive");
  const double a = f.a(r);
  const double b = f.b(r);
  if (!(a > 0.0)) throw MonopoleError("axial_field", "DomainViolation", "a(r) must be positive");
  if (std::abs(b) > 1.0)
    throw MonopoleError("axial_field", "DomainViolation", "|b(r)| must not exceed 1");
  const double z2 = std::norm(z);
  const double d = (1.0 + z2) * (1.0 + z2) - (2.0 - b * (a + 1.0 / a)) * z2;
  if (!(d > 0.0)) throw MonopoleError("axial_field", "DomainViolation", "D(z, r) <= 0");
  const double off = std::sqrt(1.0 - b * b) * (a - 1.0 / a);
  const Complex zz = off * (z * z);
  Mat2c h;
  h << a + 2.0 * b * z2 + z2 * z2 / a, std::conj(zz), zz,
      1.0 / a + 2.0 * b * z2 + a * z2 * z2;
  return h / d;
}

GaugeSample gauge_fields(const AxialField& f, Complex z, double r, double step) {
  if (r - step <= 0.0)
    throw MonopoleError("axial_field", "DomainViolation", "step reaches r <= 0");
  const Mat2c lz = dz_log(f, z, r, step);
  const Mat2c lr = dr_log(f, z, r, step);
  GaugeSample g;
  g.a_z = lz;
  g.a_r = 0.5 * lr;
  g.phi = -0.5 * kI * lr;
  g.err_z = (lz - dz_log(f, z, r, step / 2.0)).norm() / 3.0;
  g.err_r = (lr - dr_log(f, z, r, step / 2.0)).norm() / 3.0;
  return g;
}

double bog_residual_at(const AxialField& f, Complex z, double r, double step) {
  if (r - 2.0 * step <= 0.0)
    throw MonopoleError("axial_field", "DomainViolation", "step reaches r <= 0");
  const double h = step;
  const Mat2c r_term = (dr_log(f, z, r + h, h) - dr_log(f, z, r - h, h)) / (2.0 * h);
  const Mat2c gx = (dz_log(f, z + h, r, h) - dz_log(f, z - h, r, h)) / (2.0 * h);
  const Mat2c gy = (dz_log(f, z + kI * h, r, h) - dz_log(f, z - kI * h, r, h)) / (2.0 * h);
  const Mat2c zbar_term = 0.5 * (gx + kI * gy);
  const double s = std::sinh(r);
  const double w = (1.0 + std::norm(z)) * (1.0 + std::norm(z)) / (s * s);
  return (r_term + w * zbar_term).norm();
}

std::vector<std::pair<Complex, double>> FieldGrid::points() const {
  std::vector<std::pair<Complex, double>> pts;
  for (int ir = 0; ir < n_r; ++ir) {
    const double r = n_r == 1 ? r_min : r_min + (r_max - r_min) * ir / (n_r - 1);
    pts.emplace_back(Complex(0.0), r);
    for (int ip = 1; ip <= n_rho; ++ip) {
      const double rho = z_max * ip / n_rho;
      for (int it = 0; it < n_theta; ++it)
        pts.emplace_back(std::polar(rho, 2.0 * kPi * (it + 0.5) / n_theta), r);
    }
  }
  return pts;
}

ResidualReport bog_residual(const AxialField& f, const FieldGrid& grid, double step) {
  ResidualReport report;
  for (const auto& [z, r] : grid.points()) {
    const double res = bog_residual_at(f, z, r, step);
    report.per_point.push_back({z, r, res});
    report.max_frobenius = std::max(report.max_frobenius, res);
  }
  return report;
}

std::vector<double> mass_profile(const AxialField& f, const std::vector<double>& r_list,
                                 double step) {
  std::vector<double> out;
  out.reserve(r_list.size());
  for (const double r : r_list) {
    const Mat2c phi = gauge_fields(f, 0.0, r, step).phi;
    const Complex tr = (phi * phi).trace();
    out.push_back(std::sqrt(std::max(0.0, -0.5 * tr.real())));
  }
  return out;
}

HoloSphere sphere_of_sech_raw() {
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix q(3, 3);
  q << s, s, 0.0, kI * s, -kI * s, 0.0, 0.0, 0.0, 1.0;
  return HoloSphere(q, false);
}

HoloSphere sphere_of_sech() { return canonicalize(sphere_of_sech_raw()); }

}  // namespace monopole
