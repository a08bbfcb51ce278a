#include "freqlmi/region.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "freqlmi/error.hpp"

namespace freqlmi {

std::vector<CurveSample> curve_samples(const Poly& p, const Rat& omega_min, const Rat& omega_max, int count) {
  if (count < 2 || !(omega_min < omega_max)) {
    throw Error(ErrorCode::BadRange, "need count >= 2 and omega_min < omega_max");
  }
  const auto [qx, qy, qz] = freq_split(p);
  const Rat step = (omega_max - omega_min) / (count - 1);
  std::vector<CurveSample> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    Rat w = omega_min + step * k;
    out.push_back({w, qx(w), qy(w)});
  }
  return out;
}

std::string_view to_string(SegmentStatus s) {
  return s == SegmentStatus::Inside ? "Inside" : "OutsideOrBoundary";
}

SegmentResult segment_oracle(const Poly2& f, const Rat& target_x, const Rat& target_y) {
  if (f(0, 0) == 0) throw Error(ErrorCode::OriginOnCurve, "f(0,0) = 0");
  Poly u = restrict_segment(f, target_x, target_y);
  SegmentResult out;
  out.crossing_count = sturm_count(u, Rat(0), Rat(1));
  out.status = out.crossing_count == 0 ? SegmentStatus::Inside : SegmentStatus::OutsideOrBoundary;
  return out;
}

std::string_view to_string(RigidVerdict v) {
  switch (v) {
    case RigidVerdict::RigidlyConvex: return "RigidlyConvex";
    case RigidVerdict::NotRigidlyConvex: return "NotRigidlyConvex";
    case RigidVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

RigidConvexityReport rigid_convexity(const Poly2& f, int directions, std::uint64_t seed) {
  if (directions < 8) throw Error(ErrorCode::BadArgument, "rigid convexity needs at least 8 directions");
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "rigid convexity of zero");
  if (f(0, 0) == 0) throw Error(ErrorCode::OriginOnCurve, "f(0,0) = 0");

  RigidConvexityReport report;
  report.degree_f = f.total_degree();

  // Tan-half-angle t = a/b maps to the unit-circle point
  // ((b^2 - a^2), 2ab) / (a^2 + b^2).
  std::mt19937_64 rng(seed);
  constexpr std::int64_t kSpan = 1000;
  bool counterexample = false;
  for (int attempt = 0; attempt < 4 * directions && report.directions_tested < directions; ++attempt) {
    const std::int64_t a = static_cast<std::int64_t>(rng() % (2 * kSpan + 1)) - kSpan;
    const std::int64_t b = static_cast<std::int64_t>(rng() % kSpan) + 1;
    DirectionProbe probe;
    const Rat norm(static_cast<long>(a * a + b * b));
    probe.dx = Rat(static_cast<long>(b * b - a * a)) / norm;
    probe.dy = Rat(static_cast<long>(2 * a * b)) / norm;
    Poly u = restrict_line(f, probe.dx, probe.dy);
    probe.restricted_degree = u.degree();
    probe.degenerate = u.degree() < report.degree_f;
    if (!probe.degenerate) {
      probe.real_roots = count_roots_with_multiplicity(u);
      ++report.directions_tested;
      if (probe.real_roots != report.degree_f) counterexample = true;
    }
    report.per_direction.push_back(std::move(probe));
  }

  if (counterexample) {
    report.verdict = RigidVerdict::NotRigidlyConvex;
  } else if (report.directions_tested < directions) {
    report.verdict = RigidVerdict::Inconclusive;
  } else {
    report.verdict = RigidVerdict::RigidlyConvex;
  }
  return report;
}

std::pair<int, int> Raster::nearest(double x, double y) const {
  int i = static_cast<int>(std::lround((x - bbox.x0) / dx()));
  int j = static_cast<int>(std::lround((y - bbox.y0) / dy()));
  return {std::clamp(i, 0, width - 1), std::clamp(j, 0, height - 1)};
}

Raster region_raster(const Pencil& pc, const BBox& bbox, int width, int height, double tol, unsigned threads) {
  if (!pc.normalized()) throw Error(ErrorCode::NotNormalized, "raster needs a sign-normalized pencil");
  if (width < 2 || height < 2 || !(bbox.x0 < bbox.x1) || !(bbox.y0 < bbox.y1)) {
    throw Error(ErrorCode::BadRange, "raster needs width, height >= 2 and a non-empty bbox");
  }
  Raster r;
  r.bbox = bbox;
  r.width = width;
  r.height = height;
  r.cells.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
  r.min_eig.resize(r.cells.size());

  auto fill_rows = [&](int first, int last) {
    for (int j = first; j < last; ++j) {
      for (int i = 0; i < width; ++i) {
        auto m = membership_approx(pc, r.x_at(i), r.y_at(j), tol);
        auto k = static_cast<std::size_t>(j * width + i);
        r.cells[k] = m.status;
        r.min_eig[k] = m.min_eig;
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(height));
  if (threads == 1) {
    fill_rows(0, height);
    return r;
  }
  std::vector<std::jthread> workers;
  const int chunk = (height + static_cast<int>(threads) - 1) / static_cast<int>(threads);
  for (int first = 0; first < height; first += chunk) {
    workers.emplace_back(fill_rows, first, std::min(height, first + chunk));
  }
  workers.clear();
  return r;
}

}  // namespace freqlmi
