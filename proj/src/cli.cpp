#include "monopole/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "monopole/error.hpp"
#include "monopole/json_io.hpp"

namespace monopole::cli {

namespace {

using json_io::json;
using json_io::to_json;

struct Options {
  std::string input;
  std::string output;
  std::optional<double> tol;
  std::uint64_t seed = 0;
  std::optional<int> max_iter;
  std::optional<int> grid;
  std::string w;
  std::string z0;
  std::string z;
  std::optional<int> steps;
  std::string csv;
  std::string profile = "sech";
  std::optional<double> step;
  std::vector<double> r;
};

// A failure that still carries a partial report.
struct Failure {
  MonopoleError error;
  json partial;
};

std::string read_file(const std::string& path) {
  if (path.empty()) throw MonopoleError("cli", "MissingInput", "--input is required");
  std::ifstream in(path);
  if (!in) throw MonopoleError("cli", "InvalidInput", "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json read_input(const Options& o) { return json_io::parse(read_file(o.input)); }

SpherePoint parse_point(const std::string& text, const SpherePoint& fallback) {
  if (text.empty()) return fallback;
  if (text == "inf") return SpherePoint::infinity();
  std::stringstream ss(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  ss >> re;
  if (ss.fail()) throw MonopoleError("cli", "InvalidInput", "bad point \"" + text + "\"");
  if (ss >> comma) {
    if (comma != ',' || !(ss >> im))
      throw MonopoleError("cli", "InvalidInput", "points are re,im or inf");
  }
  return SpherePoint(Complex(re, im));
}

SpectralMatrix curve_of(const json& j) {
  if (j.contains("psi")) return json_io::spectral_from(j);
  if (j.contains("Q")) return spectral_from_sphere(json_io::sphere_from(j));
  if (j.contains("v")) return spectral_from_sphere(tuple_to_sphere(json_io::tuple_from(j)));
  throw MonopoleError("cli", "InvalidInput", "expected a curve, sphere or tuple");
}

HoloSphere sphere_of(const json& j) {
  if (j.contains("Q")) return json_io::sphere_from(j);
  if (j.contains("v")) return tuple_to_sphere(json_io::tuple_from(j));
  return factor_sphere(curve_of(j));
}

CoeffTuple tuple_of(const json& j) {
  if (j.contains("v")) return json_io::tuple_from(j);
  return sphere_to_tuple(sphere_of(j));
}

void write_csv(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw MonopoleError("cli", "InvalidOutput", "cannot write " + path);
  body(out);
}

json points_json(const std::vector<SpherePoint>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

json moment_json(const MomentValue& mu) {
  return {{"mu_r", mu.mu_r}, {"mu_c", to_json(mu.mu_c)}, {"magnitude", mu.magnitude()}};
}

json curve_points_json(const PSequence& seq) {
  json a = json::array();
  for (const auto& p : seq.points) a.push_back({{"w", to_json(p.w)}, {"z", to_json(p.z)}});
  return a;
}

json cmd_check(const Options& o) {
  const SpectralMatrix s = curve_of(read_input(o));
  const PositivityReport pos = positivity_check(s);
  const NondegeneracyReport nd = nondegeneracy_check(s);
  json report{{"k", s.k},
              {"positive_definite", pos.positive_definite},
              {"eigenvalues", pos.eigenvalues},
              {"determinant", to_json(nd.determinant)},
              {"condition_estimate", std::isfinite(nd.condition_estimate)
                                         ? json(nd.condition_estimate)
                                         : json("inf")},
              {"degenerate", nd.degenerate}};
  if (!pos.positive_definite)
    throw Failure{MonopoleError("curve_core", "NotPositiveDefinite",
                                "coefficient matrix is not positive definite"),
                  report};
  return report;
}

json cmd_boundary(const Options& o) {
  const SpectralMatrix s = curve_of(read_input(o));
  const DegreeReport d = degree_integral(s, 1.0, o.tol.value_or(1e-7));
  write_csv(o.csv, [&](std::ostream& out) { write_boundary_csv(out, s, o.grid.value_or(64), 2.0); });
  return {{"k", s.k}, {"degree", d.value}, {"error_estimate", d.error_estimate}};
}

json cmd_reconstruct(const Options& o) {
  const json in = read_input(o);
  if (!in.contains("samples") || !in.contains("k"))
    throw MonopoleError("cli", "InvalidInput", "expected {\"k\", \"samples\"}");
  std::vector<MetricSample> samples;
  for (const auto& s : in.at("samples"))
    samples.push_back({json_io::complex_from(s.at("z")), s.at("h").get<double>()});
  const Reconstruction r = reconstruct_psi_from_metric(samples, in.at("k").get<int>());
  json out = to_json(r.psi);
  out["residual"] = r.residual;
  out["rank"] = r.rank;
  return out;
}

json flow_json(const FlowResult& f) {
  const HyperbolicPoint x = centre_point(f.g);
  const Vec3 c = x.upper_half_space();
  return {{"g", to_json(f.g)},
          {"tuple", to_json(f.centred)},
          {"mu", moment_json(moment_map(f.centred))},
          {"norm2", norm2(f.centred)},
          {"iterations", static_cast<int>(f.trace.size()) - 1},
          {"centre", {{"X", to_json(CMatrix(x.X))}, {"upper_half_space", {c(0), c(1), c(2)}}}}};
}

void write_trace(const std::string& path, const FlowResult& f) {
  write_csv(path, [&](std::ostream& out) {
    out.precision(15);
    out << "iter,norm2,mu\n";
    for (const auto& s : f.trace) out << s.iter << ',' << s.norm2 << ',' << s.mu << '\n';
  });
}

FlowResult run_flow(const CoeffTuple& t, const Options& o) {
  try {
    FlowResult f = center_flow(t, o.tol.value_or(1e-10), o.max_iter.value_or(10000));
    write_trace(o.csv, f);
    return f;
  } catch (const PartialResultError<FlowResult>& e) {
    write_trace(o.csv, e.partial());
    throw Failure{e, flow_json(e.partial())};
  }
}

json cmd_center(const Options& o) { return flow_json(run_flow(tuple_of(read_input(o)), o)); }

json cmd_ratmap(const Options& o) {
  const HoloSphere q = sphere_of(read_input(o));
  const SpherePoint w = parse_point(o.w, SpherePoint(1.0));
  LineResult line;
  try {
    line = find_line(q, w, o.tol.value_or(1e-12), o.max_iter.value_or(50));
  } catch (const PartialResultError<LineResult>& e) {
    throw Failure{e, {{"line", to_json(e.partial().line)}, {"angle", e.partial().angle}}};
  }
  const RationalMap f = project_map(q, w, line.line);
  json out = to_json(f);
  out["poles"] = points_json(map_poles(f));
  out["zeros"] = points_json(map_zeros(f));
  out["line"] = to_json(line.line);
  out["iterations"] = line.iterations;
  return out;
}

json cmd_massless(const Options& o) {
  return to_json(massless_curve(json_io::map_from(read_input(o))));
}

json cmd_lattice(const Options& o) {
  const HoloSphere q = sphere_of(read_input(o));
  const SpherePoint z0 = parse_point(o.z0, SpherePoint(1.0));
  const int steps = o.steps.value_or(12);
  auto lattice_json = [](const ZLattice& l) {
    return json{{"points", points_json(l.points)},
                {"closed", l.closed},
                {"period", l.period},
                {"first_roots", points_json({l.first_roots[0], l.first_roots[1]})}};
  };
  try {
    return lattice_json(z_lattice(q, z0, steps));
  } catch (const PartialResultError<ZLattice>& e) {
    throw Failure{e, lattice_json(e.partial())};
  }
}

CurvePoint start_point(const SpectralMatrix& s, const Options& o) {
  const SpherePoint w = parse_point(o.w, SpherePoint(Complex(0.31, 0.73)));
  if (o.z0.empty()) return point_over(s, w);
  return {w, parse_point(o.z0, SpherePoint(0.0))};
}

json cmd_pseq(const Options& o) {
  const SpectralMatrix s = curve_of(read_input(o));
  auto seq_json = [](const PSequence& p) {
    return json{{"points", curve_points_json(p)},
                {"closed", p.closed},
                {"period", p.period},
                {"max_residual", p.max_residual}};
  };
  try {
    return seq_json(p_sequence(s, start_point(s, o), o.steps.value_or(40)));
  } catch (const PartialResultError<PSequence>& e) {
    throw Failure{e, seq_json(e.partial())};
  }
}

json cmd_poncelet(const Options& o) {
  const SpectralMatrix s = curve_of(read_input(o));
  const PonceletPolygon poly = poncelet(s, start_point(s, o), o.steps.value_or(40));
  write_csv(o.csv, [&](std::ostream& out) { write_polygon_csv(out, poly); });
  json u = json::array(), v = json::array(), conic = json::array();
  for (std::size_t i = 0; i < poly.u.size(); ++i) {
    u.push_back(to_json(poly.u[i]));
    v.push_back(to_json(poly.v[i]));
  }
  for (int i = 0; i < 6; ++i) conic.push_back(to_json(poly.conic(i)));
  return {{"u", u},
          {"v", v},
          {"conic", conic},
          {"closed", poly.closed},
          {"period", poly.period},
          {"vertex_residual", poly.vertex_residual},
          {"tangency_residual", poly.tangency_residual}};
}

json cmd_mass(const Options& o) {
  const MassEstimate m = estimate_mass(curve_of(read_input(o)), o.max_iter.value_or(200));
  return {{"mass", m.mass}, {"period", m.period}};
}

json cmd_involution(const Options& o) {
  const Su2Triple nu = json_io::triple_from(read_input(o));
  const MassFlowReport flow = mass_flow_check(nu, o.step.value_or(1e-3));
  json quartic = json::array();
  for (const Complex c : diagonal_quartic(nu)) quartic.push_back(to_json(c));
  json out{{"bracket", to_json(bracket(nu))["r"]},
           {"bracket_squared", to_json(bracket(bracket(nu)))["r"]},
           {"triple_product", nu.triple_product()},
           {"full", flow.full},
           {"quartic", quartic},
           {"mass_flow",
            {{"max_extrapolated_slope", flow.max_extrapolated}, {"invariant", flow.invariant}}}};
  if (flow.full) out["fixed_direction"] = to_json(bracket_fixed_direction(nu))["r"];
  return out;
}

AxialField field_of(const Options& o) {
  if (o.profile == "sech") return sech_field();
  if (o.profile == "zero_mass") return zero_mass_field();
  if (o.profile.rfind("constant:", 0) == 0) {
    std::stringstream ss(o.profile.substr(9));
    double a = 0.0, b = 0.0;
    char comma = 0;
    if (ss >> a >> comma >> b && comma == ',') return constant_field(a, b);
  }
  throw MonopoleError("cli", "InvalidInput",
                      "--profile is sech, zero_mass or constant:a,b");
}

json cmd_field_residual(const Options& o) {
  const AxialField f = field_of(o);
  FieldGrid grid;
  if (o.grid) grid.n_r = *o.grid;
  const double step = o.step.value_or(1e-3);
  const ResidualReport rep = bog_residual(f, grid, step);
  const ResidualReport half = bog_residual(f, grid, step / 2.0);
  write_csv(o.csv, [&](std::ostream& out) {
    out.precision(12);
    out << "r,re_z,im_z,residual\n";
    for (const auto& p : rep.per_point)
      out << p.r << ',' << p.z.real() << ',' << p.z.imag() << ',' << p.residual << '\n';
  });
  return {{"profile", f.name},
          {"step", step},
          {"points", rep.per_point.size()},
          {"max_frobenius", rep.max_frobenius},
          {"max_frobenius_half_step", half.max_frobenius},
          {"observed_order", std::log2(rep.max_frobenius / half.max_frobenius)}};
}

json cmd_field_mass(const Options& o) {
  const AxialField f = field_of(o);
  const std::vector<double> r = o.r.empty() ? std::vector<double>{1, 2, 3, 4, 5, 6} : o.r;
  const std::vector<double> m = mass_profile(f, r);
  write_csv(o.csv, [&](std::ostream& out) {
    out.precision(15);
    out << "r,m\n";
    for (std::size_t i = 0; i < r.size(); ++i) out << r[i] << ',' << m[i] << '\n';
  });
  return {{"profile", f.name}, {"r", r}, {"m", m}};
}

json cmd_field_sample(const Options& o) {
  const AxialField f = field_of(o);
  const Complex z = parse_point(o.z, SpherePoint(0.0)).chart();
  const double r = o.r.empty() ? 1.0 : o.r.front();
  const GaugeSample g = gauge_fields(f, z, r, o.step.value_or(1e-4));
  return {{"profile", f.name},
          {"z", to_json(z)},
          {"r", r},
          {"H", to_json(CMatrix(H_matrix(f, z, r)))},
          {"A_z", to_json(CMatrix(g.a_z))},
          {"A_r", to_json(CMatrix(g.a_r))},
          {"Phi", to_json(CMatrix(g.phi))},
          {"richardson_error", {{"z", g.err_z}, {"r", g.err_r}}}};
}

json cmd_pipeline(const Options& o) {
  const SpectralMatrix s = normalize_reality(curve_of(read_input(o)));
  const PositivityReport pos = positivity_check(s);
  if (!pos.positive_definite)
    throw Failure{MonopoleError("curve_core", "NotPositiveDefinite",
                                "coefficient matrix is not positive definite"),
                  {{"k", s.k}, {"eigenvalues", pos.eigenvalues}}};
  const HoloSphere q = factor_sphere(s);
  const FlowResult flow = run_flow(sphere_to_tuple(q), o);
  const DegreeReport degree = degree_integral(s);
  json out{{"k", s.k},
           {"psi", to_json(s.psi)},
           {"eigenvalues", pos.eigenvalues},
           {"sphere", to_json(q)},
           {"degree_integral", degree.value},
           {"degree_error_estimate", degree.error_estimate}};
  out["center"] = flow_json(flow);
  out["mu"] = out["center"]["mu"];
  return out;
}

void emit(const json& report, const Options& o, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output);
  if (!file) throw MonopoleError("cli", "InvalidOutput", "cannot write " + o.output);
  file << text;
}

int exit_code(const MonopoleError& e) { return e.kind() == ErrorKind::NonConvergence ? 3 : 2; }

json error_json(const std::string& command, const MonopoleError& e) {
  return {{"status", "error"},
          {"command", command},
          {"code", e.qualified_code()},
          {"message", e.what()}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral curves, holomorphic spheres and charge-2 dynamics of hyperbolic monopoles",
               "monopole"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--input,-i", o.input, "Input JSON file");
  app.add_option("--output,-o", o.output, "Write the JSON report here instead of stdout");
  app.add_option("--tol", o.tol, "Tolerance override")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for randomised checks");
  app.add_option("--max-iter", o.max_iter, "Iteration cap")->check(CLI::PositiveNumber);
  app.add_option("--grid", o.grid, "Grid size")->check(CLI::PositiveNumber);
  app.add_option("--w", o.w, "Point w as re,im or inf");
  app.add_option("--z0", o.z0, "Start point z0 as re,im or inf");
  app.add_option("--z", o.z, "Point z as re,im");
  app.add_option("--steps", o.steps, "Step cap for orbits")->check(CLI::PositiveNumber);
  app.add_option("--csv", o.csv, "Also write plot-ready CSV here");
  app.add_option("--profile", o.profile, "Field profile: sech, zero_mass or constant:a,b");
  app.add_option("--step", o.step, "Finite-difference step")->check(CLI::PositiveNumber);
  app.add_option("--r", o.r, "Hyperbolic radii")->delimiter(',');

  std::string command;
  std::function<json()> action;
  auto add = [&](CLI::App* parent, const std::string& name, const std::string& help,
                 std::function<json(const Options&)> fn, const std::string& label) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&, fn, label] {
      command = label;
      action = [&, fn] { return fn(o); };
    });
    return sub;
  };

  add(&app, "normalize", "Make Psi Hermitian and positive on the antidiagonal",
      [](const Options& opt) { return to_json(normalize_reality(curve_of(read_input(opt)))); },
      "normalize");
  add(&app, "check", "Positivity and nondegeneracy of Psi", cmd_check, "check");
  add(&app, "factor", "Canonical holomorphic sphere of Psi",
      [](const Options& opt) { return to_json(factor_sphere(curve_of(read_input(opt)))); },
      "factor");
  add(&app, "boundary", "Degree integral of the boundary curvature", cmd_boundary, "boundary");
  add(&app, "reconstruct", "Recover Psi from boundary metric samples", cmd_reconstruct,
      "reconstruct");
  add(&app, "center", "Centre a coefficient tuple", cmd_center, "center");
  add(&app, "ratmap", "Rational map f_w of a sphere", cmd_ratmap, "ratmap");
  add(&app, "massless", "Massless curve C_f of a rational map", cmd_massless, "massless");

  CLI::App* charge2 = app.add_subcommand("charge2", "Charge-2 dynamics");
  charge2->require_subcommand(1);
  charge2->fallthrough();
  add(charge2, "lattice", "z-lattice of a charge-2 sphere", cmd_lattice, "charge2 lattice");
  add(charge2, "pseq", "P-sequence on a charge-2 curve", cmd_pseq, "charge2 pseq");
  add(charge2, "poncelet", "Poncelet polygon of the P-sequence", cmd_poncelet,
      "charge2 poncelet");
  add(charge2, "mass", "Mass from P-sequence closure", cmd_mass, "charge2 mass");
  add(charge2, "involution", "Bracket involution and mass flow of a triple", cmd_involution,
      "charge2 involution");

  CLI::App* field = app.add_subcommand("field", "Axial charge-2 field");
  field->require_subcommand(1);
  field->fallthrough();
  add(field, "residual", "Bogomolny residual on a grid", cmd_field_residual, "field residual");
  add(field, "mass", "Mass profile on the axis", cmd_field_mass, "field mass");
  add(field, "sample", "H and gauge fields at a point", cmd_field_sample, "field sample");

  add(&app, "pipeline", "normalize -> positivity -> factor -> center -> report", cmd_pipeline,
      "pipeline");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    emit(action(), o, out);
    return 0;
  } catch (const Failure& f) {
    json report = error_json(command, f.error);
    report["partial"] = f.partial;
    emit(report, o, out);
    return exit_code(f.error);
  } catch (const MonopoleError& e) {
    emit(error_json(command, e), o, out);
    return exit_code(e);
  } catch (const std::exception& e) {
    emit(error_json(command, MonopoleError("cli", "InternalError", e.what())), o, out);
    return 2;
  }
}

}  // namespace monopole::cli
