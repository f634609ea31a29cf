#pragma once

// SL(2,C) acting on coefficient tuples, the SU(2) moment map, and the
// norm-minimising flow that moves a monopole to the origin of H^3.

#include <vector>

#include "monopole/sphere.hpp"
#include "monopole/types.hpp"

namespace monopole {

/// z -> (a z + b) / (c z + d) with ad - bc = 1.
struct Mobius {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  static Mobius identity() { return {}; }
  /// Throws centering.NotUnimodular unless |ad - bc - 1| <= 1e-12.
  static Mobius from_matrix(const Mat2c& m);

  Mat2c matrix() const;
  Complex det() const { return a * d - b * c; }
  Mobius inverse() const { return {d, -b, -c, a}; }
  Mobius operator*(const Mobius& o) const;
};

/// The substitution p(z) -> (cz+d)^k p((az+b)/(cz+d)) on
/// p(z) = sum_j sqrt(C(k,j)) v_j z^j, re-expanded in the same weighted basis.
///
/// Because it is a substitution this is a right action:
/// act_sl2(g1, act_sl2(g2, t)) == act_sl2(g2 * g1, t).
CoeffTuple act_sl2(const Mobius& g, const CoeffTuple& t);

/// The (k+1)x(k+1) matrix R with w_l = sum_j R_lj v_j.
CMatrix action_matrix(const Mobius& g, int k);

double norm2(const CoeffTuple& t);

struct MomentValue {
  double mu_r = 0.0;
  Complex mu_c;
  /// sqrt(mu_r^2 + 2 |mu_c|^2)
  double magnitude() const;
};

/// mu_r = sum (2j-k) |v_j|^2, mu_c = sum sqrt((j+1)(k-j)) (v_j, v_{j+1}), with
/// (a, b) = sum conj(a_i) b_i.
///
/// Along diag(e^s, e^-s) the derivative of norm2 is 2 mu_r; along the
/// translation z -> z + s e^{i theta} it is 2 Re(e^{i theta} mu_c).
MomentValue moment_map(const CoeffTuple& t);

/// v_0 != 0, v_k != 0 and the tuple is full.
bool stability_check(const CoeffTuple& t);

struct FlowStep {
  int iter = 0;
  double norm2 = 0.0;
  double mu = 0.0;
};

struct FlowResult {
  Mobius g;
  CoeffTuple centred;
  std::vector<FlowStep> trace;
};

/// Steepest descent of norm2 over the SL(2,C) orbit, exact line search along
/// each one-parameter subgroup exp(-s xi(mu)). Stops when
/// |mu| <= tol * norm2. The returned centred tuple equals act_sl2(g, t).
/// Errors: centering.NotStable, centering.MaxIterExceeded (PartialResultError
/// carrying the best iterate).
FlowResult center_flow(const CoeffTuple& t, double tol = 1e-10, int max_iter = 10000);

struct HyperbolicPoint {
  Mat2c X;  // Hermitian positive definite, det 1
  /// Upper half-space coordinates (x1, x2, x3), x3 > 0.
  Vec3 upper_half_space() const;
};

/// The original centre: the preimage of the origin, X = (g^-1)^* (g^-1).
/// Invariant under g -> g u for u in SU(2), which is exactly the freedom left
/// by center_flow (right action).
HyperbolicPoint centre_point(const Mobius& g);

/// exp of a traceless 2x2 matrix.
Mat2c exp_traceless(const Mat2c& xi);

}  // namespace monopole
