#include <doctest.h>

#include "monopole/axial_field.hpp"
#include "monopole/error.hpp"
#include "monopole/sphere.hpp"
#include "support.hpp"

using namespace monopole;
using testing_support::rel;

namespace {

CMatrix diag(std::initializer_list<double> d) {
  CMatrix m = CMatrix::Zero(d.size(), d.size());
  int i = 0;
  for (double x : d) m(i, i) = x, ++i;
  return m;
}

}  // namespace

TEST_CASE("factor_sphere examples") {
  const double a = 3.0;
  CHECK(rel(factor_sphere(SpectralMatrix(diag({1.0, a}))).Q, diag({1.0, std::sqrt(a)})) < 1e-15);
  const HoloSphere id = factor_sphere(SpectralMatrix(diag({1, 1, 1})));
  CHECK(rel(id.Q, diag({1, 1, 1})) < 1e-15);
  CHECK(id.canonical);
  try {
    factor_sphere(SpectralMatrix(diag({1, 0, 1})));
    FAIL("expected NotPositiveDefinite");
  } catch (const MonopoleError& e) {
    CHECK(e.qualified_code() == "sphere.NotPositiveDefinite");
  }
}

TEST_CASE("canonical factor is upper triangular with positive diagonal") {
  testing_support::Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = rng.integer(1, 5);
    const SpectralMatrix s(rng.positive_definite(k));
    const HoloSphere q = factor_sphere(s);
    for (int i = 0; i <= k; ++i) {
      CHECK(q.Q(i, i).imag() == 0.0);
      CHECK(q.Q(i, i).real() > 0.0);
      for (int j = 0; j < i; ++j) CHECK(q.Q(i, j) == Complex(0.0));
    }
    CHECK(rel(spectral_from_sphere(q).psi, s.psi) < 1e-12);
    // Any other factor u Q has the same canonical form.
    const HoloSphere other(rng.unitary(k + 1) * q.Q, false);
    CHECK(rel(canonicalize(other).Q, q.Q) < 1e-10);
    // Deterministic.
    CHECK(factor_sphere(s).Q == q.Q);
  }
}

TEST_CASE("spectral_from_sphere examples") {
  CHECK(rel(spectral_from_sphere(HoloSphere(diag({1.0, std::sqrt(2.0)}), true)).psi,
            diag({1, 2})) < 1e-15);
  testing_support::Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const HoloSphere q(rng.upper_triangular(rng.integer(1, 5)), true);
    CHECK(positivity_check(spectral_from_sphere(q)).positive_definite);
    CHECK(rel(factor_sphere(spectral_from_sphere(q)).Q, q.Q) < 1e-10);
  }
}

TEST_CASE("eval_sphere examples") {
  const HoloSphere id(diag({1, 1, 1}), true);
  CHECK(rel(eval_sphere(id, 0.0), diag({1, 1, 1}).col(0)) == 0.0);
  CHECK(rel(eval_sphere(id, SpherePoint::infinity()), diag({1, 1, 1}).col(2)) == 0.0);
  CVector expected(3);
  expected << std::sqrt(2.0), 0.0, 1.0;
  CHECK(rel(eval_sphere(sphere_of_sech_raw(), 1.0), expected) < 1e-15);
}

TEST_CASE("pairing examples and agreement with eval_psi") {
  const HoloSphere id(diag({1, 1, 1}), true);
  CHECK(std::abs(pairing(id, 1.0, 1.0) - 1.0) < 1e-15);
  const double a = 2.5;
  CHECK(std::abs(pairing(HoloSphere(diag({1.0, std::sqrt(a)}), true), 0.7, 0.7) - (1.0 - a)) <
        1e-14);
  testing_support::Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const HoloSphere q(rng.cmatrix(3, 3), false);
    const SpectralMatrix s = spectral_from_sphere(q);
    const SpherePoint w(rng.point()), z(rng.point());
    const Complex lhs = pairing(q, w, z);
    const Complex rhs = eval_psi(s, w, z);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(std::abs(rhs), 1e-3 * s.psi.norm()));
  }
}

TEST_CASE("pairing on the antidiagonal is |q(z)|^2") {
  testing_support::Rng rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const HoloSphere q(rng.cmatrix(4, 4), false);
    const SpherePoint z(rng.point());
    const Complex p = pairing(q, antipode(z), z);
    const double norm = eval_sphere(q, z).squaredNorm();
    CHECK(std::abs(p - norm) <= 1e-12 * norm);
    CHECK(p.real() > 0.0);
  }
}

TEST_CASE("tuple conversions") {
  const CoeffTuple t = sphere_to_tuple(HoloSphere(diag({1, 1, 1}), true));
  CHECK(rel(t.v, diag({1, 1.0 / std::sqrt(2.0), 1})) < 1e-15);

  const CoeffTuple sech = sphere_to_tuple(sphere_of_sech_raw());
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix expected(3, 3);
  expected << s, 0.5, 0.0, kI * s, -0.5 * kI, 0.0, 0.0, 0.0, 1.0;
  CHECK(rel(sech.v, expected) < 1e-15);

  CHECK(rel(sphere_to_tuple(HoloSphere(diag({1, 1}), true)).v, diag({1, 1})) == 0.0);

  testing_support::Rng rng(25);
  for (int trial = 0; trial < 20; ++trial) {
    const HoloSphere q(rng.cmatrix(4, 4), false);
    CHECK(rel(tuple_to_sphere(sphere_to_tuple(q)).Q, q.Q) < 1e-15);
  }

  CMatrix singular = diag({1, 1, 1});
  singular.col(2) = singular.col(0);
  try {
    tuple_to_sphere(CoeffTuple(singular));
    FAIL("expected NotFull");
  } catch (const MonopoleError& e) {
    CHECK(e.code() == "NotFull");
  }
}

TEST_CASE("a full sphere is an immersion") {
  testing_support::Rng rng(26);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = rng.integer(1, 5);
    const HoloSphere q(rng.cmatrix(k + 1, k + 1), false);
    const Complex z = rng.point();
    CMatrix jet(k + 1, k + 1);
    for (int m = 0; m <= k; ++m) jet.col(m) = eval_sphere_derivative(q, z, m);
    Eigen::JacobiSVD<CMatrix> svd(jet);
    CHECK(svd.singularValues()(k) > 1e-10 * svd.singularValues()(0));
    CMatrix two(k + 1, 2);
    two << jet.col(0), jet.col(1);
    Eigen::JacobiSVD<CMatrix> svd2(two);
    CHECK(svd2.singularValues()(1) > 1e-10 * svd2.singularValues()(0));
  }
}
