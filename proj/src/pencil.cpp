#include "freqlmi/pencil.hpp"

#include <algorithm>
#include <cmath>

#include "freqlmi/bezout.hpp"

namespace freqlmi {

Pencil::Pencil(SymMat f0, SymMat fx, SymMat fy, std::optional<int> sigma)
    : f0_(std::move(f0)), fx_(std::move(fx)), fy_(std::move(fy)), sigma_(sigma) {
  if (fx_.size() != f0_.size() || fy_.size() != f0_.size()) {
    throw Error(ErrorCode::BadArgument, "pencil parts differ in size");
  }
  if (f0_.size() == 0) throw Error(ErrorCode::BadArgument, "empty pencil");
  if (sigma_ && *sigma_ != 1 && *sigma_ != -1) throw Error(ErrorCode::BadArgument, "sigma must be +1 or -1");
  f0d_ = f0_.to_double();
  fxd_ = fx_.to_double();
  fyd_ = fy_.to_double();
}

SymMat Pencil::at(const Rat& x, const Rat& y) const { return f0_ + x * fx_ + y * fy_; }

std::vector<double> Pencil::at(double x, double y) const {
  std::vector<double> out(f0d_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = f0d_[k] + x * fxd_[k] + y * fyd_[k];
  return out;
}

NotDefiniteError::NotDefiniteError(Signature sig)
    : Error(ErrorCode::NotDefinite, "F(0,0) has inertia (" + std::to_string(sig.n_plus) + "," +
                                        std::to_string(sig.n_minus) + "," + std::to_string(sig.n_zero) + ")"),
      sig_(sig) {}

Pencil build_pencil(const Poly& p) {
  const auto [qx, qy, qz] = freq_split(p);
  const int n = p.degree();
  // B(qx - x qz, qy - y qz) = B(qx, qy) - x B(qz, qy) - y B(qx, qz); B(qz, qz) = 0.
  SymMat f0 = bezout_matrix(qx, qy, n);
  SymMat fx = -bezout_matrix(qz, qy, n);
  SymMat fy = -bezout_matrix(qx, qz, n);
  return Pencil(std::move(f0), std::move(fx), std::move(fy));
}

Pencil normalize_sign(const Pencil& pc) {
  if (pc.normalized()) return pc;
  switch (definiteness(pc.f0())) {
    case Definiteness::PosDef:
      return Pencil(pc.f0(), pc.fx(), pc.fy(), 1);
    case Definiteness::NegDef:
      return Pencil(-pc.f0(), -pc.fx(), -pc.fy(), -1);
    default:
      throw NotDefiniteError(signature_exact(pc.f0()));
  }
}

SymMat pencil_eval(const Pencil& pc, const Rat& x, const Rat& y) { return pc.at(x, y); }

namespace {

// Newton interpolation through (k, values[k]), k = 0..m.
Poly interpolate_on_integers(const std::vector<Rat>& values) {
  const std::size_t m = values.size();
  std::vector<Rat> dd = values;
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t k = m - 1; k >= level; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / static_cast<long>(level);
    }
  }
  // Horner on the Newton basis: dd0 + (t - 0)(dd1 + (t - 1)(dd2 + ...)).
  Poly acc = Poly::constant(dd[m - 1]);
  for (std::size_t k = m - 1; k-- > 0;) {
    acc = acc * Poly{Rat(-static_cast<long>(k)), Rat(1)} + Poly::constant(dd[k]);
  }
  return acc;
}

}  // namespace

Poly2 implicit_poly(const Pencil& pc) {
  const std::size_t n = pc.size();
  std::vector<Poly> in_y(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<Rat> column(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      column[j] = det_exact(pc.at(Rat(static_cast<long>(i)), Rat(static_cast<long>(j))));
    }
    in_y[i] = interpolate_on_integers(column);
  }
  std::vector<std::vector<Rat>> grid(n + 1, std::vector<Rat>(n + 1));
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Rat> across_x(n + 1);
    for (std::size_t i = 0; i <= n; ++i) across_x[i] = in_y[i][static_cast<int>(k)];
    Poly in_x = interpolate_on_integers(across_x);
    for (std::size_t i = 0; i <= n; ++i) grid[i][k] = in_x[static_cast<int>(i)];
  }
  return Poly2(std::move(grid));
}

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::Interior: return "Interior";
    case Membership::Boundary: return "Boundary";
    case Membership::Exterior: return "Exterior";
  }
  return "?";
}

MembershipResult membership(const Pencil& pc, const Rat& x, const Rat& y, double tol) {
  if (!pc.normalized()) throw Error(ErrorCode::NotNormalized, "membership needs a sign-normalized pencil");
  SymMat f = pc.at(x, y);
  MembershipResult out;
  out.exact_det = det_exact(f);
  out.min_eig = min_eig_approx(f, tol);
  switch (definiteness(f)) {
    case Definiteness::PosDef: out.status = Membership::Interior; break;
    case Definiteness::PosSemi:
    case Definiteness::Zero: out.status = Membership::Boundary; break;
    default: out.status = Membership::Exterior; break;
  }
  return out;
}

ApproxMembership membership_approx(const Pencil& pc, double x, double y, double tol) {
  if (!pc.normalized()) throw Error(ErrorCode::NotNormalized, "membership needs a sign-normalized pencil");
  std::vector<double> f = pc.at(x, y);
  double scale = 0.0;
  for (double v : f) scale = std::max(scale, std::abs(v));
  ApproxMembership out;
  out.band = tol * (1.0 + scale);
  out.min_eig = min_eig_approx(f, pc.size(), tol);
  if (std::abs(out.min_eig) <= out.band) {
    out.status = Membership::Boundary;
  } else {
    out.status = out.min_eig > 0 ? Membership::Interior : Membership::Exterior;
  }
  return out;
}

}  // namespace freqlmi
