#include "freqlmi/io.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "freqlmi/error.hpp"

namespace freqlmi {

Json rat_to_json(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return Json(r.get_num().get_si());
  return Json(to_string(r));
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected an integer or a rational string, got " + j.dump());
}

Json matrix_to_json(const SymMat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(rat_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

SymMat matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "matrix must be an array of rows");
  std::vector<std::vector<Rat>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(ErrorCode::ParseError, "matrix row must be an array");
    std::vector<Rat> r;
    for (const auto& v : row) r.push_back(rat_from_json(v));
    rows.push_back(std::move(r));
  }
  return SymMat(rows);
}

Json pencil_to_json(const Pencil& pc) {
  Json j;
  j["n"] = pc.size();
  j["F0"] = matrix_to_json(pc.f0());
  j["Fx"] = matrix_to_json(pc.fx());
  j["Fy"] = matrix_to_json(pc.fy());
  if (pc.sigma()) j["sigma"] = *pc.sigma();
  return j;
}

Pencil pencil_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "pencil must be a JSON object");
  for (const char* key : {"n", "F0", "Fx", "Fy"}) {
    if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("pencil is missing '") + key + "'");
  }
  SymMat f0 = matrix_from_json(j["F0"]);
  SymMat fx = matrix_from_json(j["Fx"]);
  SymMat fy = matrix_from_json(j["Fy"]);
  if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() != static_cast<std::int64_t>(f0.size())) {
    throw Error(ErrorCode::ParseError, "pencil 'n' does not match F0");
  }
  std::optional<int> sigma;
  if (j.contains("sigma")) {
    if (!j["sigma"].is_number_integer()) throw Error(ErrorCode::ParseError, "sigma must be +1 or -1");
    sigma = j["sigma"].get<int>();
    if (definiteness(f0) != Definiteness::PosDef) throw NotDefiniteError(signature_exact(f0));
  }
  return Pencil(std::move(f0), std::move(fx), std::move(fy), sigma);
}

Json report_to_json(const StabilityReport& r) {
  Json j;
  j["verdict"] = std::string(to_string(r.verdict));
  Json column = Json::array();
  for (const auto& v : r.routh.first_column) column.push_back(rat_to_json(v));
  j["routh_first_column"] = std::move(column);
  j["routh_verdict"] = std::string(to_string(r.routh.verdict));
  j["right_half_count"] = r.routh.right_half_count;
  j["bezout_signature"] = {r.bezout_signature.n_plus, r.bezout_signature.n_minus, r.bezout_signature.n_zero};
  j["bezout_definiteness"] = std::string(to_string(r.bezout));
  j["interlacing"] = r.interlacing;
  j["hermite_biehler"] = r.hermite_biehler;
  j["cauchy_index"] = r.cauchy_index_value;
  j["agreement"] = r.agreement;
  return j;
}

Json membership_to_json(const MembershipResult& m) {
  Json j;
  j["status"] = std::string(to_string(m.status));
  j["min_eig"] = m.min_eig;
  j["exact_det"] = rat_to_json(m.exact_det);
  return j;
}

Json implicit_to_json(const Poly2& f) {
  Json terms = Json::array();
  for (const auto& [i, k, c] : f.terms()) {
    terms.push_back({{"x", i}, {"y", k}, {"coefficient", rat_to_json(c)}});
  }
  Json j;
  j["degree"] = f.total_degree();
  j["expression"] = to_expression(f);
  j["terms"] = std::move(terms);
  return j;
}

Json rigid_to_json(const RigidConvexityReport& r) {
  Json probes = Json::array();
  for (const auto& p : r.per_direction) {
    Json e;
    e["direction"] = {rat_to_json(p.dx), rat_to_json(p.dy)};
    e["restricted_degree"] = p.restricted_degree;
    e["degenerate"] = p.degenerate;
    if (!p.degenerate) e["real_roots"] = p.real_roots;
    probes.push_back(std::move(e));
  }
  Json j;
  j["degree_f"] = r.degree_f;
  j["directions_tested"] = r.directions_tested;
  j["verdict"] = std::string(to_string(r.verdict));
  j["per_direction"] = std::move(probes);
  return j;
}

Json curve_to_json(const std::vector<CurveSample>& samples) {
  Json out = Json::array();
  for (const auto& s : samples) {
    out.push_back({{"omega", rat_to_json(s.omega)}, {"x", rat_to_json(s.x)}, {"y", rat_to_json(s.y)}});
  }
  return out;
}

Json raster_to_json(const Raster& r) {
  Json rows = Json::array();
  for (int j = 0; j < r.height; ++j) {
    std::string line;
    for (int i = 0; i < r.width; ++i) line.push_back(to_string(r.at(i, j))[0]);
    rows.push_back(std::move(line));
  }
  Json j;
  j["bbox"] = {r.bbox.x0, r.bbox.y0, r.bbox.x1, r.bbox.y1};
  j["width"] = r.width;
  j["height"] = r.height;
  j["legend"] = {{"I", "Interior"}, {"B", "Boundary"}, {"E", "Exterior"}};
  j["rows"] = std::move(rows);
  return j;
}

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

}  // namespace

std::string curve_to_csv(const std::vector<CurveSample>& samples) {
  std::string out = "omega,x,y\n";
  for (const auto& s : samples) {
    out += fmt("%.15g", to_double(s.omega)) + "," + fmt("%.15g", to_double(s.x)) + "," +
           fmt("%.15g", to_double(s.y)) + "\n";
  }
  return out;
}

BBox curve_extent(const std::vector<CurveSample>& curve) {
  if (curve.empty()) throw Error(ErrorCode::BadRange, "no curve samples");
  BBox b{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
         std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
  for (const auto& s : curve) {
    b.x0 = std::min(b.x0, to_double(s.x));
    b.x1 = std::max(b.x1, to_double(s.x));
    b.y0 = std::min(b.y0, to_double(s.y));
    b.y1 = std::max(b.y1, to_double(s.y));
  }
  const double px = 0.05 * std::max(b.x1 - b.x0, 1.0);
  const double py = 0.05 * std::max(b.y1 - b.y0, 1.0);
  return {b.x0 - px, b.y0 - py, b.x1 + px, b.y1 + py};
}

namespace {

// One rectangle per horizontal run of non-exterior cells.
std::string region_path(const Raster& grid, const auto& num) {
  std::string d;
  // Cell edges sit half a step from the grid points; neighbours compute the
  // shared edge from the same expression so no gap opens between them.
  auto edge_x = [&](int i) { return grid.bbox.x0 + (i - 0.5) * grid.dx(); };
  auto edge_y = [&](int j) { return grid.bbox.y0 + (j - 0.5) * grid.dy(); };
  for (int j = 0; j < grid.height; ++j) {
    int i = 0;
    while (i < grid.width) {
      if (grid.at(i, j) == Membership::Exterior) {
        ++i;
        continue;
      }
      int end = i;
      while (end + 1 < grid.width && grid.at(end + 1, j) != Membership::Exterior) ++end;
      const double left = edge_x(i);
      const double right = edge_x(end + 1);
      if (!d.empty()) d += ' ';
      d += "M" + num(left) + " " + num(edge_y(j)) + " H" + num(right) + " V" + num(edge_y(j + 1)) + " H" +
           num(left) + " Z";
      i = end + 1;
    }
  }
  return d;
}

}  // namespace

std::string render_svg(const BBox& b, const Raster* raster, const std::vector<CurveSample>& curve) {
  const double w = b.x1 - b.x0;
  const double h = b.y1 - b.y0;
  const double stroke = 0.003 * std::max(w, h);
  auto num = [](double v) { return fmt("%.6g", v); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(b.x0) + " " + num(-b.y1) + " " + num(w) +
         " " + num(h) + "\" width=\"600\" height=\"" + num(600.0 * h / w) + "\">\n";
  out += "<g transform=\"scale(1,-1)\">\n";
  if (raster != nullptr) {
    out += "<path class=\"region\" fill=\"#c6dbef\" stroke=\"none\" d=\"" + region_path(*raster, num) + "\"/>\n";
  }
  if (!curve.empty()) {
    std::string pts;
    for (const auto& s : curve) {
      if (!pts.empty()) pts += ' ';
      pts += num(to_double(s.x)) + "," + num(to_double(s.y));
    }
    out += "<polyline class=\"curve\" fill=\"none\" stroke=\"#08519c\" stroke-width=\"" + num(stroke) +
           "\" points=\"" + pts + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace freqlmi
