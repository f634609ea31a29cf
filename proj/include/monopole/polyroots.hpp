#pragma once

#include <vector>

#include "monopole/curve.hpp"
#include "monopole/types.hpp"

namespace monopole {

/// Roots in P^1 of p(z) = sum_j c_j z^j of formal degree c.size()-1.
///
/// Leading coefficients below `deficiency_tol * max|c_j|` are treated as zero
/// and each contributes a root at infinity; the remaining roots come from the
/// eigenvalues of the companion matrix, polished by one Newton step.
/// Throws polyroots.IdenticallyZero when every coefficient vanishes.
std::vector<SpherePoint> projective_roots(const CVector& coeffs, double deficiency_tol = 1e-13);

/// Horner evaluation of sum_j c_j z^j.
Complex poly_eval(const CVector& coeffs, Complex z);

/// Homogeneous evaluation sum_j c_j z0^{d-j} z1^j on the representative.
Complex poly_eval(const CVector& coeffs, const SpherePoint& p);

/// Coefficients of the product of two polynomials.
CVector poly_mul(const CVector& a, const CVector& b);

/// Resultant of two polynomials of the same formal degree d, via the
/// 2d x 2d Sylvester matrix (vanishes iff they share a root in P^1).
Complex resultant(const CVector& a, const CVector& b);

/// Matches two root multisets in the chordal metric and returns the largest
/// matched distance (greedy assignment; exact for well separated roots).
double root_set_distance(const std::vector<SpherePoint>& a, const std::vector<SpherePoint>& b);

}  // namespace monopole
