#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "freqlmi/pencil.hpp"
#include "freqlmi/region.hpp"
#include "freqlmi/stability.hpp"

namespace freqlmi {

using Json = nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, everything else an
/// "a/b" string.
Json rat_to_json(const Rat& r);
/// Accepts JSON integers and "a" / "a/b" strings. Throws ParseError.
Rat rat_from_json(const Json& j);

Json matrix_to_json(const SymMat& m);
SymMat matrix_from_json(const Json& j);

/// { "n", "F0", "Fx", "Fy", "sigma" }; sigma only for normalized pencils.
Json pencil_to_json(const Pencil& pc);
/// Throws ParseError on malformed input and NotDefinite when a stored
/// sigma does not leave F0 positive definite.
Pencil pencil_from_json(const Json& j);

Json report_to_json(const StabilityReport& r);
Json membership_to_json(const MembershipResult& m);
Json implicit_to_json(const Poly2& f);
Json rigid_to_json(const RigidConvexityReport& r);
Json curve_to_json(const std::vector<CurveSample>& samples);
Json raster_to_json(const Raster& r);

/// Header "omega,x,y"; values as decimals with 15 significant digits.
std::string curve_to_csv(const std::vector<CurveSample>& samples);

/// Filled path over the non-exterior cells and, when given, the curve as a
/// polyline. viewBox is the raster bbox with y pointing up.
std::string render_svg(const BBox& bbox, const Raster* raster, const std::vector<CurveSample>& curve);
inline std::string render_svg(const Raster& raster, const std::vector<CurveSample>& curve) {
  return render_svg(raster.bbox, &raster, curve);
}

/// Smallest bbox holding every sample, padded by 5% per side.
BBox curve_extent(const std::vector<CurveSample>& curve);

}  // namespace freqlmi
