#include "monopole/json_io.hpp"

#include "monopole/error.hpp"

namespace monopole::json_io {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw MonopoleError("cli", "InvalidInput", what);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) invalid(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    invalid("complex numbers are [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const SpherePoint& p) {
  if (p.is_infinity()) return "inf";
  return to_json(p.chart());
}

SpherePoint point_from(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return SpherePoint::infinity();
    invalid("points are [re, im] or \"inf\"");
  }
  return SpherePoint(complex_from(j));
}

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

CMatrix matrix_from(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) invalid("matrices are nested arrays");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != cols)
      invalid("ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from(j[r][c]);
  }
  return m;
}

json to_json(const CVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

CVector vector_from(const json& j) {
  if (!j.is_array() || j.empty()) invalid("vectors are non-empty arrays");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = complex_from(j[i]);
  return v;
}

json to_json(const SpectralMatrix& s) {
  json j{{"k", s.k}, {"psi", to_json(s.psi)}, {"normalized", s.normalized}};
  if (s.massless) j["massless"] = true;
  return j;
}

SpectralMatrix spectral_from(const json& j) {
  SpectralMatrix s(matrix_from(field(j, "psi")), j.value("normalized", false));
  s.massless = j.value("massless", false);
  if (j.contains("k") && j.at("k").get<int>() != s.k) invalid("k does not match psi");
  return s;
}

json to_json(const HoloSphere& q) {
  return {{"k", q.k}, {"Q", to_json(q.Q)}, {"canonical", q.canonical}};
}

HoloSphere sphere_from(const json& j) {
  HoloSphere q(matrix_from(field(j, "Q")), j.value("canonical", false));
  if (j.contains("k") && j.at("k").get<int>() != q.k) invalid("k does not match Q");
  return q;
}

json to_json(const CoeffTuple& t) {
  json v = json::array();
  for (int j = 0; j <= t.k; ++j) v.push_back(to_json(CVector(t.v.col(j))));
  return {{"k", t.k}, {"v", v}};
}

CoeffTuple tuple_from(const json& j) {
  const json& v = field(j, "v");
  if (!v.is_array() || v.size() < 2) invalid("tuple needs k+1 >= 2 vectors");
  const auto n = static_cast<Eigen::Index>(v.size());
  CMatrix m(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const CVector col = vector_from(v[c]);
    if (col.size() != n) invalid("tuple vectors must have k+1 entries");
    m.col(c) = col;
  }
  CoeffTuple t(m);
  if (j.contains("k") && j.at("k").get<int>() != t.k) invalid("k does not match v");
  return t;
}

json to_json(const Su2Triple& nu) {
  json r = json::array();
  for (int i = 0; i < 3; ++i) r.push_back({nu.r(0, i), nu.r(1, i), nu.r(2, i)});
  return {{"r", r}};
}

Su2Triple triple_from(const json& j) {
  const json& r = field(j, "r");
  if (!r.is_array() || r.size() != 3) invalid("triple needs three vectors");
  Su2Triple nu;
  for (int i = 0; i < 3; ++i) {
    if (!r[i].is_array() || r[i].size() != 3) invalid("triple vectors are real 3-vectors");
    for (int c = 0; c < 3; ++c) nu.r(c, i) = r[i][c].get<double>();
  }
  return nu;
}

json to_json(const RationalMap& f) {
  return {{"num", to_json(f.num)}, {"den", to_json(f.den)}, {"scale", to_json(f.scale)}};
}

RationalMap map_from(const json& j) {
  RationalMap f;
  f.num = vector_from(field(j, "num"));
  f.den = vector_from(field(j, "den"));
  f.scale = j.contains("scale") ? complex_from(j.at("scale")) : Complex(1.0);
  return f;
}

json to_json(const Mobius& g) { return to_json(CMatrix(g.matrix())); }

Mobius mobius_from(const json& j) {
  const CMatrix m = matrix_from(j);
  if (m.rows() != 2 || m.cols() != 2) invalid("Mobius maps are 2x2");
  return Mobius::from_matrix(m);
}

json to_json(const ProjLine& line) {
  return {{"u1", to_json(line.u1)}, {"u2", to_json(line.u2)}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    invalid(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace monopole::json_io
