#include <doctest.h>

#include "monopole/curve.hpp"
#include "monopole/error.hpp"
#include "support.hpp"

using namespace monopole;

namespace {

SpectralMatrix diag(std::initializer_list<Complex> d) {
  CMatrix m = CMatrix::Zero(d.size(), d.size());
  int i = 0;
  for (Complex x : d) m(i, i) = x, ++i;
  return SpectralMatrix(m);
}

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const MonopoleError& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("antipode") {
  CHECK(antipode(SpherePoint(0.0)).is_infinity());
  CHECK(std::abs(antipode(SpherePoint(1.0)).chart() - Complex(-1.0)) < 1e-15);
  const SpherePoint p(Complex(1.0, 2.0));
  CHECK(chordal_distance(antipode(antipode(p)), p) < 1e-15);
  // No fixed points: the antipode is as far away as possible.
  testing_support::Rng rng;
  for (int i = 0; i < 20; ++i) {
    const SpherePoint z(rng.point());
    CHECK(chordal_distance(antipode(z), z) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("eval_psi examples") {
  const double a = 3.0;
  CHECK(std::abs(eval_psi(diag({1.0, a}), 1.0, 1.0) - (1.0 - a)) < 1e-14);
  const SpectralMatrix id = diag({1.0, 1.0, 1.0});
  const Complex w = std::polar(1.0, kPi / 3);
  CHECK(std::abs(eval_psi(id, w, 1.0)) < 1e-14);
  CHECK(std::abs(eval_psi(diag({1.0, 1.0}), antipode(SpherePoint(1.0)), 1.0) - 2.0) < 1e-14);
}

TEST_CASE("homogeneous and chart evaluation agree") {
  testing_support::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = rng.integer(1, 4);
    const SpectralMatrix s(rng.cmatrix(k + 1, k + 1));
    const Complex w = rng.point(), z = rng.point();
    const Complex direct = testing_support::oracle_psi(s.psi, w, z);
    CHECK(std::abs(eval_psi_chart(s, w, z) - direct) <= 1e-12 * std::abs(direct) + 1e-12);
    // The representative of w in the u = -1/w chart is (1, -1/w).
    CHECK(std::abs(eval_psi(s, w, z) - direct) <= 1e-12 * std::abs(direct) + 1e-12);
  }
}

TEST_CASE("evaluation at infinity is the top homogeneous component") {
  const SpectralMatrix s = diag({1.0, 2.0, 5.0});
  // w = 0 means -1/w = infinity: only row k survives, times z^j.
  CHECK(std::abs(eval_psi(s, 0.0, 2.0) - 5.0 * 4.0) < 1e-14);
  CHECK(std::abs(eval_psi(s, 1.0, SpherePoint::infinity()) - 5.0) < 1e-14);
}

TEST_CASE("tau-reality for Hermitian Psi") {
  testing_support::Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = rng.integer(1, 4);
    const SpectralMatrix s(rng.positive_definite(k));
    const SpherePoint w(rng.point()), z(rng.point());
    const Complex lhs = eval_psi(s, antipode(z), antipode(w));
    const Complex rhs = std::conj(eval_psi(s, w, z));
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
  }
}

TEST_CASE("antidiagonal positivity for positive definite Psi") {
  testing_support::Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = rng.integer(1, 5);
    const SpectralMatrix s(rng.positive_definite(k));
    for (const auto& z : antidiagonal_panel()) {
      const Complex v = eval_psi(s, antipode(z), z);
      CHECK(std::abs(v.imag()) <= 1e-12 * std::abs(v));
      CHECK(v.real() > 0.0);
    }
  }
}

TEST_CASE("normalize_reality examples") {
  const SpectralMatrix a = normalize_reality(diag({kI, 2.0 * kI}));
  CHECK(testing_support::rel(a.psi, diag({1.0, 2.0}).psi) < 1e-15);
  const SpectralMatrix b = normalize_reality(diag({-1.0, -2.0}));
  CHECK(testing_support::rel(b.psi, diag({1.0, 2.0}).psi) < 1e-15);
  CHECK(code_of([] { normalize_reality(diag({1.0, Complex(1.0, 1.0)})); }) == "NotRealCurve");
  CHECK(code_of([] { normalize_reality(diag({1.0, -1.0})); }) == "VanishesOnAntidiagonal");
}

TEST_CASE("normalize_reality is idempotent") {
  testing_support::Rng rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = rng.integer(1, 4);
    const Complex phase = std::polar(1.0, rng.uniform(-kPi, kPi));
    const SpectralMatrix raw(phase * rng.positive_definite(k));
    const SpectralMatrix once = normalize_reality(raw);
    const SpectralMatrix twice = normalize_reality(once);
    CHECK(once.psi == twice.psi);
    CHECK(once.psi == once.psi.adjoint());
  }
}

TEST_CASE("positivity_check examples") {
  const auto r = positivity_check(diag({1.0, 2.0}));
  CHECK(r.positive_definite);
  CHECK(r.eigenvalues == std::vector<double>{1.0, 2.0});
  CHECK_FALSE(positivity_check(diag({1.0, -1.0})).positive_definite);
  CHECK_FALSE(positivity_check(diag({1.0, 0.0, 1.0})).positive_definite);
  CMatrix m(2, 2);
  m << 1.0, 1.0, 0.0, 1.0;
  CHECK(code_of([&] { positivity_check(SpectralMatrix(m)); }) == "NotHermitian");
}

TEST_CASE("nondegeneracy_check examples") {
  const auto id = nondegeneracy_check(diag({1.0, 1.0, 1.0}));
  CHECK(std::abs(id.determinant - 1.0) < 1e-15);
  CHECK_FALSE(id.degenerate);
  const auto d = nondegeneracy_check(diag({1.0, 0.0, 1.0}));
  CHECK(std::abs(d.determinant) == 0.0);
  CHECK(d.degenerate);
  CHECK_FALSE(nondegeneracy_check(axial_spectral(2, 0.5)).degenerate);
}

TEST_CASE("axial_spectral examples") {
  CHECK(testing_support::rel(axial_spectral(2, 0.5).psi, diag({1.0, 1.0, 1.0}).psi) < 1e-12);
  CHECK(testing_support::rel(axial_spectral(1, 0.7, 2.5).psi, diag({1.0, 2.5}).psi) < 1e-12);
  const SpectralMatrix zero = axial_spectral(2, 0.0);
  CHECK(zero.massless);
  CHECK(testing_support::rel(zero.psi, diag({1.0, 0.0, 1.0}).psi) < 1e-15);
  // Small mass approaches the massless matrix.
  CHECK(std::abs(axial_spectral(2, 1e-6).psi(1, 1)) < 1e-5);
}

TEST_CASE("axial coefficients increase strictly with the mass") {
  for (int k = 2; k <= 6; ++k) {
    for (int j = 1; j < k; ++j) {
      double prev = -1e300;
      for (int step = 1; step <= 20; ++step) {
        const double value = axial_spectral(k, 0.1 * step).psi(j, j).real();
        CHECK(value > prev);
        prev = value;
      }
    }
  }
}

TEST_CASE("axial curve vanishes at its roots") {
  for (int k = 1; k <= 5; ++k) {
    const SpectralMatrix s = axial_spectral(k, 0.8, 1.3);
    for (const Complex a : axial_roots(k, 0.8, 1.3)) {
      // prod (w - a_j z) vanishes at w = a z.
      const Complex z(0.4, -0.2);
      CHECK(normalized_psi_residual(s, a * z, z) < 1e-13);
    }
  }
}

TEST_CASE("shape validation") {
  CHECK(code_of([] { SpectralMatrix(CMatrix::Zero(2, 3)); }) == "InvalidShape");
  CHECK(code_of([] { SpectralMatrix(CMatrix::Zero(1, 1)); }) == "InvalidShape");
  CHECK(code_of([] { SpherePoint::homogeneous(0.0, 0.0); }) == "InvalidPoint");
}
