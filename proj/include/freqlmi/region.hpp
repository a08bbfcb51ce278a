#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "freqlmi/pencil.hpp"
#include "freqlmi/poly.hpp"

namespace freqlmi {

/// A point p(j omega) = x + j y on the frequency-response curve.
struct CurveSample {
  Rat omega;
  Rat x;
  Rat y;
};

/// `count` exact samples at equally spaced omega in [omega_min, omega_max].
/// Throws BadRange unless count >= 2 and omega_min < omega_max.
std::vector<CurveSample> curve_samples(const Poly& p, const Rat& omega_min, const Rat& omega_max, int count);

enum class SegmentStatus { Inside, OutsideOrBoundary };
std::string_view to_string(SegmentStatus s);

struct SegmentResult {
  SegmentStatus status = SegmentStatus::Inside;
  int crossing_count = 0;  // distinct curve points on the segment, t in (0, 1]
};

/// Decides membership in the open component of {f != 0} that contains the
/// origin by counting roots of f(t x, t y) for t in (0, 1].
/// Throws OriginOnCurve when f(0, 0) = 0.
SegmentResult segment_oracle(const Poly2& f, const Rat& target_x, const Rat& target_y);

struct DirectionProbe {
  Rat dx;
  Rat dy;
  int real_roots = 0;  // with multiplicity
  int restricted_degree = 0;
  bool degenerate = false;  // restricted degree below deg f
};

enum class RigidVerdict { RigidlyConvex, NotRigidlyConvex, Inconclusive };
std::string_view to_string(RigidVerdict v);

struct RigidConvexityReport {
  int degree_f = 0;
  int directions_tested = 0;  // generic directions only
  std::vector<DirectionProbe> per_direction;  // degenerate draws included
  RigidVerdict verdict = RigidVerdict::Inconclusive;
};

/// Probes `directions` generic lines through the origin, drawn as rational
/// points on the unit circle from a seeded generator. Degenerate draws are
/// resampled, up to four times the requested budget in total.
/// Throws BadArgument (directions < 8), ZeroPolynomial, OriginOnCurve.
RigidConvexityReport rigid_convexity(const Poly2& f, int directions, std::uint64_t seed);

struct BBox {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

/// Membership sampled on a width x height grid of points spanning the bbox
/// corners. Cell (i, j) sits at x0 + i dx, y0 + j dy.
struct Raster {
  BBox bbox;
  int width = 0;
  int height = 0;
  std::vector<Membership> cells;  // row-major, row j = 0 at y0
  std::vector<double> min_eig;

  double dx() const { return (bbox.x1 - bbox.x0) / (width - 1); }
  double dy() const { return (bbox.y1 - bbox.y0) / (height - 1); }
  double x_at(int i) const { return bbox.x0 + i * dx(); }
  double y_at(int j) const { return bbox.y0 + j * dy(); }
  Membership at(int i, int j) const { return cells[static_cast<std::size_t>(j * width + i)]; }
  /// Grid cell nearest to (x, y), clamped to the grid.
  std::pair<int, int> nearest(double x, double y) const;
};

/// Throws NotNormalized, BadRange (w or h < 2, empty bbox). Rows are split
/// across `threads` workers (0 = hardware concurrency); the result does not
/// depend on the split.
Raster region_raster(const Pencil& pc, const BBox& bbox, int width, int height, double tol = 1e-9,
                     unsigned threads = 0);

}  // namespace freqlmi
