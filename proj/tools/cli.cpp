#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "freqlmi/error.hpp"
#include "freqlmi/io.hpp"
#include "freqlmi/pencil.hpp"
#include "freqlmi/region.hpp"
#include "freqlmi/stability.hpp"

namespace freqlmi::cli {

namespace {

struct Options {
  std::vector<std::string> coeffs;
  bool ascending = false;
  std::string format = "json";
  double tol = 1e-9;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> point;
  std::string pencil_file;
  int directions = 32;
  std::string omega_min = "-5";
  std::string omega_max = "5";
  int count = 201;
  std::vector<double> bbox;
  std::vector<int> resolution{200, 200};
  unsigned threads = 0;
};

Poly polynomial(const Options& o) {
  if (o.coeffs.empty()) throw Error(ErrorCode::ParseError, "no polynomial coefficients given");
  Poly p = parse_poly(o.coeffs, o.ascending);
  if (p.degree() < 1) throw Error(ErrorCode::DegreeTooSmall, "polynomial must have degree >= 1");
  return p;
}

// Normalized pencil of a polynomial the stability report calls Stable.
Pencil stable_pencil(const Poly& p) {
  StabilityReport report = classify(p);
  if (report.verdict == Verdict::AntiStable) {
    throw Error(ErrorCode::NotStable, "polynomial is anti-stable; no normalized pencil is produced");
  }
  if (report.verdict == Verdict::Marginal) {
    throw Error(ErrorCode::NotDefinite, "polynomial has roots on the imaginary axis; F(0,0) is singular");
  }
  return normalize_sign(build_pencil(p));
}

// Normalized when possible, otherwise the negated Bezoutian pencil, the
// orientation used for the reference quartic.
Pencil oriented_pencil(const Poly& p) {
  Pencil raw = build_pencil(p);
  try {
    return normalize_sign(raw);
  } catch (const NotDefiniteError&) {
    return Pencil(-raw.f0(), -raw.fx(), -raw.fy());
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int stability_cmd(const Options& o, std::ostream& out) {
  emit(out, report_to_json(classify(polynomial(o))));
  return kExitOk;
}

int pencil_cmd(const Options& o, std::ostream& out) {
  Poly p = polynomial(o);
  Pencil raw = build_pencil(p);
  if (classify(p).verdict == Verdict::Stable) {
    emit(out, pencil_to_json(normalize_sign(raw)));
  } else {
    emit(out, pencil_to_json(raw));
  }
  return kExitOk;
}

int implicit_cmd(const Options& o, std::ostream& out) {
  emit(out, implicit_to_json(implicit_poly(oriented_pencil(polynomial(o)))));
  return kExitOk;
}

int member_cmd(const Options& o, std::ostream& out) {
  Pencil pc = [&] {
    if (o.pencil_file.empty()) return stable_pencil(polynomial(o));
    std::ifstream in(o.pencil_file);
    if (!in) throw Error(ErrorCode::BadArgument, "cannot open " + o.pencil_file);
    Json j;
    try {
      in >> j;
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    return pencil_from_json(j);
  }();
  const Rat x = parse_rat(o.point.at(0));
  const Rat y = parse_rat(o.point.at(1));
  Json j = membership_to_json(membership(pc, x, y, o.tol));
  j["point"] = {rat_to_json(x), rat_to_json(y)};
  emit(out, j);
  return kExitOk;
}

int rigid_cmd(const Options& o, std::ostream& out) {
  Poly2 f = implicit_poly(oriented_pencil(polynomial(o)));
  Json j = rigid_to_json(rigid_convexity(f, o.directions, o.seed));
  j["seed"] = o.seed;
  emit(out, j);
  return kExitOk;
}

std::vector<CurveSample> samples(const Options& o, const Poly& p) {
  return curve_samples(p, parse_rat(o.omega_min), parse_rat(o.omega_max), o.count);
}

BBox bbox_of(const Options& o) { return {o.bbox.at(0), o.bbox.at(1), o.bbox.at(2), o.bbox.at(3)}; }

int curve_cmd(const Options& o, std::ostream& out) {
  auto curve = samples(o, polynomial(o));
  if (o.format == "csv") {
    out << curve_to_csv(curve);
  } else if (o.format == "svg") {
    out << render_svg(o.bbox.empty() ? curve_extent(curve) : bbox_of(o), nullptr, curve);
  } else {
    emit(out, curve_to_json(curve));
  }
  return kExitOk;
}

int region_cmd(const Options& o, std::ostream& out) {
  Poly p = polynomial(o);
  Pencil pc = stable_pencil(p);
  Raster raster = region_raster(pc, bbox_of(o), o.resolution.at(0), o.resolution.at(1), o.tol, o.threads);
  if (o.format == "svg") {
    out << render_svg(raster, samples(o, p));
  } else {
    emit(out, raster_to_json(raster));
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hurwitz stability and LMI description of the inner frequency-response set"};
  app.require_subcommand(1);
  Options o;

  auto add_poly = [&](CLI::App* sub) {
    sub->add_option("coefficients", o.coeffs, "Polynomial coefficients, highest power first")->required();
    sub->add_flag("--ascending", o.ascending, "Coefficients are given lowest power first");
  };
  auto add_curve = [&](CLI::App* sub) {
    sub->add_option("--omega-min", o.omega_min, "Lowest sampled frequency")->capture_default_str();
    sub->add_option("--omega-max", o.omega_max, "Highest sampled frequency")->capture_default_str();
    sub->add_option("--count", o.count, "Number of samples")->capture_default_str();
  };

  auto* stability = app.add_subcommand("stability", "Routh-Hurwitz, Hermite-Biehler and Bezoutian verdicts");
  add_poly(stability);

  auto* pencil = app.add_subcommand("pencil", "Symmetric pencil F0 + x Fx + y Fy as JSON");
  add_poly(pencil);

  auto* implicit = app.add_subcommand("implicit", "Implicit equation f(x, y) = det F(x, y) of the curve");
  add_poly(implicit);

  auto* member = app.add_subcommand("member", "LMI membership of a point");
  member->add_option("coefficients", o.coeffs, "Polynomial coefficients, highest power first");
  member->add_flag("--ascending", o.ascending, "Coefficients are given lowest power first");
  member->add_option("--pencil", o.pencil_file, "Read a normalized pencil from this JSON file instead");
  member->add_option("--point", o.point, "Point x y (integers, a/b or decimals)")->expected(2)->required();
  member->add_option("--tol", o.tol, "Boundary tolerance, relative")->capture_default_str()->check(CLI::PositiveNumber);

  auto* rigid = app.add_subcommand("rigid", "Probe rigid convexity of the implicit curve");
  add_poly(rigid);
  rigid->add_option("--directions", o.directions, "Generic directions to test (>= 8)")->capture_default_str();
  rigid->add_option("--seed", o.seed, "Direction sampler seed")->capture_default_str();

  auto* curve = app.add_subcommand("curve", "Sample p(j omega)");
  add_poly(curve);
  add_curve(curve);
  curve->add_option("--format", o.format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
  curve->add_option("--bbox", o.bbox, "SVG viewport x0 y0 x1 y1")->expected(4);

  auto* region = app.add_subcommand("region", "Rasterize the LMI set");
  add_poly(region);
  add_curve(region);
  region->add_option("--bbox", o.bbox, "x0 y0 x1 y1")->expected(4)->required();
  region->add_option("--resolution", o.resolution, "Grid points along x and y")->expected(2)->capture_default_str();
  region->add_option("--format", o.format, "json or svg")->check(CLI::IsMember({"json", "svg"}));
  region->add_option("--tol", o.tol, "Boundary tolerance, relative")->capture_default_str()->check(CLI::PositiveNumber);
  region->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

  std::vector<const char*> argv{"freqlmi"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (member->parsed() && o.coeffs.empty() && o.pencil_file.empty()) {
      err << "member: give polynomial coefficients or --pencil FILE\n";
      return kExitUsage;
    }
    if (stability->parsed()) return stability_cmd(o, out);
    if (pencil->parsed()) return pencil_cmd(o, out);
    if (implicit->parsed()) return implicit_cmd(o, out);
    if (member->parsed()) return member_cmd(o, out);
    if (rigid->parsed()) return rigid_cmd(o, out);
    if (curve->parsed()) return curve_cmd(o, out);
    if (region->parsed()) return region_cmd(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::BadArgument) return kExitUsage;
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace freqlmi::cli
