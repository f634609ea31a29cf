#include <doctest.h>

#include "monopole/axial_field.hpp"
#include "monopole/centering.hpp"
#include "monopole/boundary.hpp"
#include "monopole/charge2.hpp"
#include "monopole/error.hpp"
#include "support.hpp"

using namespace monopole;

namespace {

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const MonopoleError& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("H on the axis is diag(a, 1/a)") {
  const AxialField f = sech_field();
  for (const double r : {0.3, 1.0, 2.5}) {
    const Mat2c h = H_matrix(f, 0.0, r);
    const double a = 1.0 / std::cosh(r);
    CHECK(std::abs(h(0, 0) - a) < 1e-15);
    CHECK(std::abs(h(1, 1) - 1.0 / a) < 1e-14);
    CHECK(std::abs(h(0, 1)) == 0.0);
  }
}

TEST_CASE("H is Hermitian positive definite with unit determinant on the domain") {
  for (const AxialField& f : {sech_field(), zero_mass_field()}) {
    FieldGrid grid;
    grid.r_min = 0.1;
    grid.z_max = 4.0;
    for (const auto& [z, r] : grid.points()) {
      const Mat2c h = H_matrix(f, z, r);
      CHECK(h == h.adjoint());
      Eigen::SelfAdjointEigenSolver<Mat2c> es(h);
      CHECK(es.eigenvalues()(0) > 0.0);
      // det = h00 h11 - |h01|^2 cancels when a(r) is far from 1.
      CHECK(std::abs(h.determinant() - 1.0) < 1e-14 * std::abs(h(0, 0) * h(1, 1)));
    }
  }
}

TEST_CASE("b = a = 1 gives a diagonal H") {
  const Mat2c h = H_matrix(constant_field(1.0, 1.0), Complex(0.7, 0.2), 1.0);
  CHECK(std::abs(h(0, 1)) == 0.0);
  CHECK(std::abs(h(1, 0)) == 0.0);
}

TEST_CASE("domain violations") {
  CHECK(code_of([] { H_matrix(constant_field(0.5, 1.5), 0.3, 1.0); }) == "DomainViolation");
  CHECK(code_of([] { H_matrix(constant_field(-0.5, 0.0), 0.3, 1.0); }) == "DomainViolation");
  CHECK(code_of([] { H_matrix(sech_field(), 0.3, 0.0); }) == "DomainViolation");
  // D = 1 + b(a + 1/a)|z|^2 + |z|^4 vanishes at |z| = 1 when a = 1, b = -1.
  CHECK(code_of([] { H_matrix(constant_field(1.0, -1.0), 1.0, 1.0); }) == "DomainViolation");
  CHECK(code_of([] { H_matrix(constant_field(1.0, -1.0), 0.9, 1.0); }).empty());
  CHECK(code_of([] { gauge_fields(sech_field(), 0.0, 1e-4, 1e-3); }) == "DomainViolation");
}

TEST_CASE("gauge fields") {
  const AxialField f = sech_field();
  const GaugeSample axis = gauge_fields(f, 0.0, 1.3);
  CHECK(std::abs(axis.phi(0, 1)) < 1e-12);
  CHECK(std::abs(axis.phi(1, 0)) < 1e-12);
  // d_r ln sech = -tanh.
  CHECK(std::abs(axis.phi(0, 0) - (-0.5 * kI) * (-std::tanh(1.3))) < 1e-8);

  const GaugeSample g = gauge_fields(f, Complex(0.6, -0.4), 0.9);
  CHECK((g.phi - (-kI) * g.a_r).norm() == 0.0);
  CHECK(g.err_z < 1e-8);
  CHECK(g.err_r < 1e-8);

  // Halving the step reduces the derivative error by four.
  const Complex z(0.5, 0.3);
  const double r = 1.1;
  const GaugeSample ref = gauge_fields(f, z, r, 1e-5);
  const double e1 = (gauge_fields(f, z, r, 4e-2).a_r - ref.a_r).norm();
  const double e2 = (gauge_fields(f, z, r, 2e-2).a_r - ref.a_r).norm();
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("the sech field solves the Bogomolny equation") {
  const ResidualReport rep = bog_residual(sech_field(), FieldGrid{}, 1e-3);
  CHECK(rep.max_frobenius < 1e-5);
  const ResidualReport half = bog_residual(sech_field(), FieldGrid{}, 5e-4);
  CHECK(half.max_frobenius < rep.max_frobenius / 3.0);
}

TEST_CASE("residual converges at second order at interior points") {
  testing_support::Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex z = std::polar(rng.uniform(0.0, 2.0), rng.uniform(-kPi, kPi));
    const double r = rng.uniform(0.3, 3.0);
    const double e1 = bog_residual_at(sech_field(), z, r, 2e-2);
    const double e2 = bog_residual_at(sech_field(), z, r, 1e-2);
    const double order = std::log2(e1 / e2);
    CHECK(order >= 1.7);
    CHECK(order <= 2.3);
  }
}

TEST_CASE("non-solutions leave a residual that does not shrink") {
  const ResidualReport zero = bog_residual(zero_mass_field(), FieldGrid{}, 1e-3);
  const ResidualReport zero_half = bog_residual(zero_mass_field(), FieldGrid{}, 5e-4);
  CHECK(zero.max_frobenius > 1e-1);
  CHECK(zero_half.max_frobenius == doctest::Approx(zero.max_frobenius).epsilon(1e-3));
  CHECK(bog_residual(constant_field(0.5, 0.5), FieldGrid{}, 1e-3).max_frobenius > 1e-1);
}

TEST_CASE("mass profile") {
  const std::vector<double> r{1, 2, 3, 4, 5, 6};
  const auto m = mass_profile(sech_field(), r);
  CHECK(std::abs(m.back() - 0.5) < 1e-3);
  for (std::size_t i = 0; i < r.size(); ++i) {
    CHECK(m[i] == doctest::Approx(0.5 * std::tanh(r[i])).epsilon(1e-7));
    if (i > 0) CHECK(m[i] > m[i - 1]);
  }
  // a = exp(-2r) gives |a'/a| / 2 = 1 for every r.
  for (const double x : mass_profile(zero_mass_field(), r))
    CHECK(x == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("the sphere of the sech field") {
  const HoloSphere q = sphere_of_sech();
  CHECK(q.canonical);
  const MomentValue mu = moment_map(sphere_to_tuple(sphere_of_sech_raw()));
  CHECK(std::abs(mu.mu_r) < 1e-15);
  CHECK(std::abs(mu.mu_c) < 1e-15);
  const auto ev = positivity_check(spectral_from_sphere(q)).eigenvalues;
  for (const double e : ev) CHECK(e == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(z_lattice(q, 1.0, 12).period == 3);
  // Its boundary curvature integrates to the charge.
  CHECK(degree_integral(spectral_from_sphere(q)).value == doctest::Approx(2.0).epsilon(1e-6));
}
