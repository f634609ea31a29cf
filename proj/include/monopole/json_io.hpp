#pragma once

// JSON interchange. Complex numbers are [re, im]; points of P^1 are [re, im]
// or the string "inf"; matrices are row-major nested arrays.

#include <string>

#include <json.hpp>

#include "monopole/axial_field.hpp"
#include "monopole/boundary.hpp"
#include "monopole/centering.hpp"
#include "monopole/charge2.hpp"
#include "monopole/curve.hpp"
#include "monopole/ratmap.hpp"
#include "monopole/sphere.hpp"

namespace monopole::json_io {

using nlohmann::json;

json to_json(Complex c);
Complex complex_from(const json& j);

json to_json(const SpherePoint& p);
SpherePoint point_from(const json& j);

json to_json(const CMatrix& m);
CMatrix matrix_from(const json& j);

json to_json(const CVector& v);
CVector vector_from(const json& j);

/// {"k", "psi", "normalized"} (plus "massless" when set)
json to_json(const SpectralMatrix& s);
SpectralMatrix spectral_from(const json& j);

/// {"k", "Q", "canonical"}
json to_json(const HoloSphere& q);
HoloSphere sphere_from(const json& j);

/// {"k", "v"}, v[j] the j-th vector
json to_json(const CoeffTuple& t);
CoeffTuple tuple_from(const json& j);

/// {"r": [r0, r1, r2]}
json to_json(const Su2Triple& nu);
Su2Triple triple_from(const json& j);

/// {"num", "den", "scale"}
json to_json(const RationalMap& f);
RationalMap map_from(const json& j);

json to_json(const Mobius& g);
Mobius mobius_from(const json& j);

json to_json(const ProjLine& line);

/// Parses a JSON document, raising cli.InvalidInput on malformed text.
json parse(const std::string& text);

}  // namespace monopole::json_io
