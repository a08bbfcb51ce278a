#pragma once

#include <optional>
#include <vector>

#include "freqlmi/error.hpp"
#include "freqlmi/poly.hpp"
#include "freqlmi/symmat.hpp"

namespace freqlmi {

/// Symmetric linear pencil F(x, y) = F0 + x Fx + y Fy.
///
/// A pencil built from a polynomial starts unnormalized; normalize_sign()
/// multiplies it by sigma = +1 or -1 so that F0 is positive definite and
/// records sigma. Only normalized pencils describe an LMI set.
class Pencil {
 public:
  Pencil(SymMat f0, SymMat fx, SymMat fy, std::optional<int> sigma = std::nullopt);

  std::size_t size() const { return f0_.size(); }
  const SymMat& f0() const { return f0_; }
  const SymMat& fx() const { return fx_; }
  const SymMat& fy() const { return fy_; }
  std::optional<int> sigma() const { return sigma_; }
  bool normalized() const { return sigma_.has_value(); }

  SymMat at(const Rat& x, const Rat& y) const;
  /// Row-major double image of F(x, y).
  std::vector<double> at(double x, double y) const;

  friend bool operator==(const Pencil&, const Pencil&) = default;

 private:
  SymMat f0_, fx_, fy_;
  std::optional<int> sigma_;
  std::vector<double> f0d_, fxd_, fyd_;
};

/// Raised by normalize_sign when F0 is not definite; carries the inertia of
/// the unnormalized F0 as a certificate.
class NotDefiniteError : public Error {
 public:
  explicit NotDefiniteError(Signature sig);
  const Signature& signature() const noexcept { return sig_; }

 private:
  Signature sig_;
};

/// Bezoutian of (q_x - x, q_y - y) at size deg p, split by bilinearity into
/// its constant, x and y parts. Throws DegreeTooSmall.
Pencil build_pencil(const Poly& p);

/// Throws NotDefiniteError when neither sign makes F0 positive definite.
Pencil normalize_sign(const Pencil& pc);

SymMat pencil_eval(const Pencil& pc, const Rat& x, const Rat& y);

/// f(x, y) = det F(x, y), recovered exactly by interpolating det F on the
/// integer grid {0..n} x {0..n}.
Poly2 implicit_poly(const Pencil& pc);

enum class Membership { Interior, Boundary, Exterior };
std::string_view to_string(Membership m);

struct MembershipResult {
  Membership status = Membership::Exterior;
  double min_eig = 0.0;
  Rat exact_det;
};

/// Exact LMI membership: Interior iff F(x, y) is positive definite, Boundary
/// iff it is positive semidefinite and singular, Exterior otherwise.
/// min_eig is informational. Throws NotNormalized.
MembershipResult membership(const Pencil& pc, const Rat& x, const Rat& y, double tol = 1e-9);

struct ApproxMembership {
  Membership status = Membership::Exterior;
  double min_eig = 0.0;
  double band = 0.0;  // tol * (1 + max |F_ij|)
};

/// Floating-point membership: Boundary when |min eig| <= band. Used for
/// rasterization and other float queries. Throws NotNormalized.
ApproxMembership membership_approx(const Pencil& pc, double x, double y, double tol = 1e-9);

}  // namespace freqlmi
