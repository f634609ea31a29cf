#include "monopole/sphere.hpp"

#include <cmath>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/SVD>

#include "monopole/error.hpp"

namespace monopole {

namespace {

constexpr double kFullnessTol = 1e-12;

double falling_factorial(int n, int order) {
  double r = 1.0;
  for (int i = 0; i < order; ++i) r *= n - i;
  return r;
}

}  // namespace

HoloSphere::HoloSphere(CMatrix q_matrix, bool is_canonical)
    : k(static_cast<int>(q_matrix.rows()) - 1), Q(std::move(q_matrix)), canonical(is_canonical) {
  if (Q.rows() != Q.cols() || Q.rows() < 2)
    throw MonopoleError("sphere", "InvalidShape", "Q must be square of size k+1 >= 2");
}

CoeffTuple::CoeffTuple(CMatrix columns)
    : k(static_cast<int>(columns.cols()) - 1), v(std::move(columns)) {
  if (v.rows() != v.cols() || v.cols() < 2)
    throw MonopoleError("sphere", "InvalidShape",
                        "tuple must hold k+1 vectors in C^{k+1}, k >= 1");
}

HoloSphere factor_sphere(const SpectralMatrix& s) {
  const PositivityReport report = positivity_check(s);
  if (!report.positive_definite)
    throw MonopoleError("sphere", "NotPositiveDefinite",
                        "smallest eigenvalue " + std::to_string(report.eigenvalues.front()) +
                            "; not a monopole spectral curve");
  const CMatrix sym = (s.psi + s.psi.adjoint()) / 2.0;
  Eigen::LLT<CMatrix> llt(sym);
  if (llt.info() != Eigen::Success)
    throw MonopoleError("sphere", "NotPositiveDefinite", "Cholesky factorization failed");
  // Psi = L L^*, so Q = L^* is upper triangular with positive diagonal.
  CMatrix q = llt.matrixU();
  return HoloSphere(q, true);
}

SpectralMatrix spectral_from_sphere(const HoloSphere& q) {
  const CMatrix psi = q.Q.adjoint() * q.Q;
  return SpectralMatrix((psi + psi.adjoint()) / 2.0, true);
}

HoloSphere canonicalize(const HoloSphere& q) {
  if (q.canonical) return q;
  return factor_sphere(spectral_from_sphere(q));
}

CVector eval_sphere(const HoloSphere& q, const SpherePoint& z) {
  return q.Q * monomials(z, q.k);
}

CVector eval_sphere_derivative(const HoloSphere& q, Complex z, int order) {
  CVector dv = CVector::Zero(q.k + 1);
  for (int j = order; j <= q.k; ++j)
    dv(j) = falling_factorial(j, order) * std::pow(z, j - order);
  return q.Q * dv;
}

Complex pairing(const HoloSphere& q, const SpherePoint& w, const SpherePoint& z) {
  // conj(q(what)) = conj(Q) v(-1/w) because what = conj(-1/w).
  const CVector left = q.Q.conjugate() * monomials(negative_inverse(w), q.k);
  const CVector right = eval_sphere(q, z);
  return left.transpose() * right;
}

CoeffTuple sphere_to_tuple(const HoloSphere& q) {
  CMatrix v = q.Q;
  for (int j = 0; j <= q.k; ++j) v.col(j) /= std::sqrt(binomial(q.k, j));
  return CoeffTuple(v);
}

double fullness(const CoeffTuple& t) {
  Eigen::JacobiSVD<CMatrix> svd(t.v);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv(0) == 0.0) return 0.0;
  return sv(sv.size() - 1) / sv(0);
}

HoloSphere tuple_to_sphere(const CoeffTuple& t) {
  if (fullness(t) <= kFullnessTol)
    throw MonopoleError("sphere", "NotFull", "tuple does not represent an embedding");
  CMatrix q = t.v;
  for (int j = 0; j <= t.k; ++j) q.col(j) *= std::sqrt(binomial(t.k, j));
  return HoloSphere(q, false);
}

}  // namespace monopole
