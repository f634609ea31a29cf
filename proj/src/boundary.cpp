#include "monopole/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include <Eigen/SVD>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "monopole/error.hpp"

namespace monopole {

namespace {

CMatrix chart_matrix(const SpectralMatrix& s, Chart chart) {
  if (chart == Chart::Z) return s.psi;
  return s.psi.colwise().reverse().rowwise().reverse();
}

struct MetricJet {
  double h;
  Complex h_z;
  double h_zzbar;
};

// h = sum_ij P_ij conj(z)^i z^j together with its first and mixed derivatives.
MetricJet metric_jet(const CMatrix& p, Complex z) {
  const int n = static_cast<int>(p.rows());
  std::vector<Complex> zp(n + 1), zbp(n + 1);
  zp[0] = zbp[0] = 1.0;
  for (int j = 1; j <= n; ++j) {
    zp[j] = zp[j - 1] * z;
    zbp[j] = zbp[j - 1] * std::conj(z);
  }
  Complex h = 0.0, h_z = 0.0, h_zzbar = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex c = p(i, j);
      h += c * zbp[i] * zp[j];
      if (j > 0) h_z += c * zbp[i] * static_cast<double>(j) * zp[j - 1];
      if (i > 0 && j > 0) h_zzbar += c * static_cast<double>(i * j) * zbp[i - 1] * zp[j - 1];
    }
  }
  return {h.real(), h_z, h_zzbar.real()};
}

double curvature(const CMatrix& p, Complex z) {
  const MetricJet jet = metric_jet(p, z);
  return (jet.h * jet.h_zzbar - std::norm(jet.h_z)) / (jet.h * jet.h);
}

// integral over the disc |z| < radius of the curvature density.
double disc_integral(const CMatrix& p, double radius, double tol, double& error) {
  auto ring = [&](double r) {
    if (r == 0.0) return 0.0;
    int n = 16;
    auto trapezoid = [&](int m) {
      double sum = 0.0;
      for (int j = 0; j < m; ++j) sum += curvature(p, std::polar(r, 2.0 * kPi * j / m));
      return 2.0 * kPi * sum / m;
    };
    double prev = trapezoid(n);
    for (; n <= 4096; n *= 2) {
      const double next = trapezoid(2 * n);
      if (std::abs(next - prev) <= 1e-14 * std::max(1.0, std::abs(next))) return r * next;
      prev = next;
    }
    throw MonopoleError("boundary", "QuadratureNotConverged",
                        "angular trapezoid did not settle at r = " + std::to_string(r),
                        ErrorKind::NonConvergence);
  };
  double err = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      ring, 0.0, radius, 15, tol * 1e-3, &err);
  error = err;
  return value;
}

}  // namespace

double metric_h(const SpectralMatrix& s, Complex z, Chart chart) {
  return metric_jet(chart_matrix(s, chart), z).h;
}

ConnectionSample connection_at_infinity(const SpectralMatrix& s, Complex z, Chart chart) {
  const CMatrix p = chart_matrix(s, chart);
  const MetricJet jet = metric_jet(p, z);
  ConnectionSample out;
  out.z = z;
  out.a_z = jet.h_z / (2.0 * jet.h);
  out.a_zbar = -std::conj(out.a_z);
  out.f_density = (jet.h * jet.h_zzbar - std::norm(jet.h_z)) / (jet.h * jet.h);
  return out;
}

DegreeReport degree_integral(const SpectralMatrix& s, double split_radius, double tol) {
  if (!positivity_check(s).positive_definite)
    throw MonopoleError("boundary", "NotPositiveDefinite",
                        "boundary metric needs a positive definite coefficient matrix");
  if (!(split_radius > 0.0))
    throw MonopoleError("boundary", "InvalidRadius", "split radius must be positive");
  double err_inner = 0.0, err_outer = 0.0;
  const double inner = disc_integral(chart_matrix(s, Chart::Z), split_radius, tol, err_inner);
  const double outer =
      disc_integral(chart_matrix(s, Chart::InvZ), 1.0 / split_radius, tol, err_outer);
  DegreeReport report;
  report.value = (inner + outer) / kPi;
  report.error_estimate = (err_inner + err_outer) / kPi;
  if (!(report.error_estimate <= tol))
    throw MonopoleError("boundary", "QuadratureNotConverged",
                        "error estimate " + std::to_string(report.error_estimate) +
                            " above target " + std::to_string(tol),
                        ErrorKind::NonConvergence);
  return report;
}

Reconstruction reconstruct_psi_from_metric(const std::vector<MetricSample>& samples, int k) {
  if (k < 1) throw MonopoleError("boundary", "InvalidCharge", "k must be >= 1");
  const int n = k + 1;
  const int unknowns = n * n;
  const int rows = static_cast<int>(samples.size());
  if (rows < unknowns)
    throw MonopoleError("boundary", "Underdetermined",
                        std::to_string(rows) + " samples for " + std::to_string(unknowns) +
                            " unknowns");

  // Unknown layout: Psi_ii for each i, then (Re, Im) of Psi_ij for i < j.
  Eigen::MatrixXd a(rows, unknowns);
  Eigen::VectorXd rhs(rows);
  for (int s = 0; s < rows; ++s) {
    const Complex z = samples[s].z;
    int col = 0;
    for (int i = 0; i < n; ++i) a(s, col++) = std::pow(std::norm(z), i);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const Complex c = std::pow(std::conj(z), i) * std::pow(z, j);
        a(s, col++) = 2.0 * c.real();
        a(s, col++) = -2.0 * c.imag();
      }
    }
    rhs(s) = samples[s].h;
  }
  Eigen::VectorXd scale = a.colwise().norm().transpose();
  for (int c = 0; c < unknowns; ++c) {
    if (scale(c) == 0.0)
      throw MonopoleError("boundary", "Underdetermined", "a monomial vanishes on every sample");
    a.col(c) /= scale(c);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-11);
  const int rank = static_cast<int>(svd.rank());
  if (rank < unknowns)
    throw MonopoleError("boundary", "Underdetermined",
                        "sample placement is degenerate (rank " + std::to_string(rank) + " of " +
                            std::to_string(unknowns) + ")");
  Eigen::VectorXd x = svd.solve(rhs);
  const double residual = (a * x - rhs).norm() / std::max(rhs.norm(), 1e-300);
  x = x.cwiseQuotient(scale);

  CMatrix psi = CMatrix::Zero(n, n);
  int col = 0;
  for (int i = 0; i < n; ++i) psi(i, i) = x(col++);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      psi(i, j) = Complex(x(col), x(col + 1));
      psi(j, i) = std::conj(psi(i, j));
      col += 2;
    }
  }
  Reconstruction out{SpectralMatrix(psi, true), residual, rank};
  if (!positivity_check(out.psi).positive_definite)
    throw MonopoleError("boundary", "NotPositive",
                        "recovered matrix is not positive definite; boundary data inconsistent");
  return out;
}

void write_boundary_csv(std::ostream& out, const SpectralMatrix& s, int n, double extent) {
  out << "re_z,im_z,h,re_Az,im_Az,F\n";
  out.precision(12);
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      const double x = n == 1 ? 0.0 : -extent + 2.0 * extent * ix / (n - 1);
      const double y = n == 1 ? 0.0 : -extent + 2.0 * extent * iy / (n - 1);
      const Complex z(x, y);
      const ConnectionSample c = connection_at_infinity(s, z);
      out << x << ',' << y << ',' << metric_h(s, z) << ',' << c.a_z.real() << ','
          << c.a_z.imag() << ',' << c.f_density << '\n';
    }
  }
}

}  // namespace monopole
