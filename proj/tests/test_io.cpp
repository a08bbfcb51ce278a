#include <doctest.h>

#include "freqlmi/error.hpp"
#include "freqlmi/io.hpp"
#include "oracles.hpp"

using namespace freqlmi;

namespace {

Poly desc(std::vector<Rat> c) { return Poly::from_descending(c); }

const Poly kCubic = desc({1, 1, 4, 1});

}  // namespace

TEST_CASE("rationals in JSON") {
  CHECK(rat_to_json(Rat(-7)) == Json(-7));
  CHECK(rat_to_json(Rat(3, 4)) == Json("3/4"));
  CHECK(rat_from_json(Json(5)) == 5);
  CHECK(rat_from_json(Json("-3/6")) == Rat(-1, 2));
  Rat huge = Rat(mpz_class("123456789012345678901234567890"));
  CHECK(rat_from_json(rat_to_json(huge)) == huge);
  CHECK_THROWS_AS(rat_from_json(Json(1.5)), Error);
  CHECK_THROWS_AS(rat_from_json(Json("x")), Error);
}

TEST_CASE("pencil JSON round trip") {
  Pencil pc = normalize_sign(build_pencil(kCubic));
  Json j = pencil_to_json(pc);
  CHECK(j["n"] == 3);
  CHECK(j["sigma"] == -1);
  CHECK(j["F0"] == Json::parse("[[1,0,-1],[0,3,0],[-1,0,4]]"));
  Pencil back = pencil_from_json(Json::parse(j.dump()));
  CHECK(back == pc);

  Json raw = pencil_to_json(build_pencil(desc({1, 0, 0, -1, -1})));
  CHECK_FALSE(raw.contains("sigma"));
  CHECK_FALSE(pencil_from_json(raw).normalized());

  Json bad = j;
  bad["F0"] = Json::parse("[[-1,0,1],[0,-3,0],[1,0,-4]]");
  CHECK_THROWS_AS(pencil_from_json(bad), Error);
  Json missing = j;
  missing.erase("Fy");
  CHECK_THROWS_AS(pencil_from_json(missing), Error);
  Json asym = j;
  asym["Fx"] = Json::parse("[[0,1,0],[0,0,0],[0,0,0]]");
  CHECK_THROWS_AS(pencil_from_json(asym), Error);
}

TEST_CASE("report and implicit JSON") {
  Json r = report_to_json(classify(kCubic));
  CHECK(r["verdict"] == "Stable");
  CHECK(r["bezout_signature"] == Json::parse("[0,3,0]"));
  CHECK(r["interlacing"] == true);
  CHECK(r["cauchy_index"] == 3);
  CHECK(r["routh_first_column"] == Json::parse("[1,1,3,1]"));

  Json f = implicit_to_json(implicit_poly(normalize_sign(build_pencil(kCubic))));
  CHECK(f["degree"] == 3);
  CHECK(f["expression"] == "9 - 3*x - 5*x^2 - y^2 - x^3");
  CHECK(f["terms"].size() == 5);
}

TEST_CASE("curve CSV and JSON") {
  auto samples = curve_samples(kCubic, 0, 2, 3);
  CHECK(curve_to_csv(samples) == "omega,x,y\n0,1,0\n1,0,3\n2,-3,0\n");
  Json j = curve_to_json(samples);
  CHECK(j.size() == 3);
  CHECK(j[2]["x"] == -3);
  auto thirds = curve_samples(kCubic, 0, 1, 4);
  CHECK(curve_to_csv(thirds).find("0.333333333333333,0.888888888888889,1.2962962962963") != std::string::npos);
}

TEST_CASE("raster JSON and SVG") {
  Pencil pc = normalize_sign(build_pencil(kCubic));
  Raster r = region_raster(pc, BBox{-5, -7, 2, 7}, 8, 15);
  Json j = raster_to_json(r);
  CHECK(j["rows"].size() == 15);
  // Row y = 0 runs x = -5..2; the curve meets the axis at x = -3 and x = 1.
  CHECK(j["rows"][7] == "EEBIIIBE");

  auto curve = curve_samples(kCubic, -5, 5, 201);
  std::string svg = render_svg(r, curve);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(oracle::svg_region_contains(svg, 0, 0));
  CHECK_FALSE(oracle::svg_region_contains(svg, -4, 0));
  CHECK(render_svg(r, curve) == svg);

  std::string only_curve = render_svg(curve_extent(curve), nullptr, curve);
  CHECK(only_curve.find("class=\"region\"") == std::string::npos);
}
