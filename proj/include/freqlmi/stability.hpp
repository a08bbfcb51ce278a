#pragma once

#include <string_view>
#include <vector>

#include "freqlmi/poly.hpp"
#include "freqlmi/symmat.hpp"

namespace freqlmi {

enum class RouthVerdict { Stable, Marginal, Unstable };

struct RouthResult {
  RouthVerdict verdict = RouthVerdict::Unstable;
  /// Roots with positive real part, counted with multiplicity.
  int right_half_count = 0;
  /// First column of the table, leading coefficient made positive. Empty
  /// when every attempted table still hits a zero pivot.
  std::vector<Rat> first_column;
  /// k > 0 when a zero pivot forced the table to be built for p(s) (s + k).
  int shift_factor = 0;
  /// p has an even or odd factor (roots symmetric about the origin).
  bool zero_row = false;
};

/// Exact Routh table. A vanishing row exposes the auxiliary factor A of p,
/// whose right-half roots are counted directly before the table is rerun on
/// p / A; a zero pivot in a nonzero row is resolved by multiplying p by a
/// stable factor (s + k), which keeps the right-half-plane count. The
/// reported first column uses the classical derivative rule. Marginal means
/// a root on the imaginary axis. Throws DegreeTooSmall.
RouthResult routh_hurwitz(const Poly& p);

/// Interlacing of q_x and q_y, oriented so that every jump of q_x / q_y
/// goes from -inf to +inf. Throws DegreeTooSmall.
bool hermite_biehler(const Poly& p);

enum class BezoutStability { DefiniteStable, DefiniteAntiStable, NotDefinite };

/// B(q_x, q_y) is negative definite for every stable p.
inline constexpr Definiteness kStableBezoutDefiniteness = Definiteness::NegDef;

/// Definiteness of B(q_x, q_y) at size deg p. Throws DegreeTooSmall.
BezoutStability bezout_stability(const Poly& p);

enum class Verdict { Stable, AntiStable, Unstable, Marginal };

std::string_view to_string(RouthVerdict v);
std::string_view to_string(BezoutStability v);
std::string_view to_string(Verdict v);

struct StabilityReport {
  Verdict verdict = Verdict::Unstable;
  RouthResult routh;
  Signature bezout_signature;
  BezoutStability bezout = BezoutStability::NotDefinite;
  bool interlacing = false;
  bool hermite_biehler = false;
  /// Cauchy index of q_x / q_y (0 when q_y vanishes identically).
  int cauchy_index_value = 0;
  bool agreement = true;
};

/// Runs all three criteria with Routh-Hurwitz as ground truth and throws
/// InternalInconsistency if the others disagree with it.
StabilityReport classify(const Poly& p);

}  // namespace freqlmi
