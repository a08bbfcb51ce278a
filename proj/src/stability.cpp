#include "freqlmi/stability.hpp"

#include "freqlmi/bezout.hpp"
#include "freqlmi/error.hpp"

namespace freqlmi {

namespace {

void require_degree(const Poly& p) {
  if (p.degree() < 1) throw Error(ErrorCode::DegreeTooSmall, "stability needs degree >= 1");
}

bool all_zero(const std::vector<Rat>& row) {
  for (const auto& v : row) {
    if (v != 0) return false;
  }
  return true;
}

enum class Stop { Complete, ZeroRow, ZeroPivot };

struct Table {
  Stop stop = Stop::Complete;
  bool zero_row = false;
  Poly aux;  // auxiliary polynomial of the first vanishing row
  std::vector<Rat> first_column;
};

// Classical table. With `derive` a vanishing row is replaced by the derivative
// of its auxiliary polynomial and the build goes on; without it the build
// stops there and reports the auxiliary polynomial.
Table build_table(const Poly& p, bool derive) {
  const int n = p.degree();
  const Rat lead_sign = sign(p.leading()) > 0 ? 1 : -1;
  const std::size_t width = static_cast<std::size_t>(n / 2 + 1);
  std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(n + 1), std::vector<Rat>(width));
  for (int k = 0; k <= n; ++k) {
    auto idx = static_cast<std::size_t>(k / 2);
    rows[static_cast<std::size_t>(k % 2)][idx] = lead_sign * p[n - k];
  }

  Table t;
  for (int k = 1; k <= n; ++k) {
    auto& prev = rows[static_cast<std::size_t>(k - 1)];
    auto& row = rows[static_cast<std::size_t>(k)];
    if (k >= 2) {
      const auto& prev2 = rows[static_cast<std::size_t>(k - 2)];
      for (std::size_t i = 0; i + 1 < width; ++i) {
        row[i] = (prev[0] * prev2[i + 1] - prev2[0] * prev[i + 1]) / prev[0];
      }
    }
    if (all_zero(row)) {
      // Auxiliary polynomial of row k-1 has degree n-k+1 in steps of two.
      const int d = n - k + 1;
      if (!t.zero_row) {
        std::vector<Rat> coeffs(static_cast<std::size_t>(d + 1));
        for (std::size_t i = 0; 2 * static_cast<int>(i) <= d; ++i) coeffs[static_cast<std::size_t>(d) - 2 * i] = prev[i];
        t.aux = Poly(coeffs);
      }
      t.zero_row = true;
      if (!derive) {
        t.stop = Stop::ZeroRow;
        return t;
      }
      for (std::size_t i = 0; i < width; ++i) row[i] = prev[i] * (d - 2 * static_cast<int>(i));
    }
    if (row[0] == 0 && k < n) {
      t.stop = Stop::ZeroPivot;
      return t;
    }
  }
  for (const auto& row : rows) t.first_column.push_back(row[0]);
  return t;
}

// Roots of p on the imaginary axis, with multiplicity. A root j w0 has the
// same multiplicity in p as w0 has in gcd(q_x, q_y).
int axis_multiplicity(const Poly& p) {
  auto [qx, qy, qz] = freq_split(p);
  Poly common = gcd(qx, qy);
  if (common.degree() < 1) return 0;
  return count_roots_with_multiplicity(common);
}

// Right-half-plane roots with multiplicity. A vanishing row exposes an even
// or odd factor A of p whose roots are symmetric about the origin; those are
// counted directly and the table is rerun on p / A.
int right_half_count(const Poly& p, bool& zero_row, int depth = 0) {
  if (p.degree() < 1) return 0;
  if (depth > 64) throw Error(ErrorCode::InternalInconsistency, "Routh recursion did not terminate");
  Table t = build_table(p, false);
  if (t.stop == Stop::Complete) {
    int changes = 0;
    for (std::size_t i = 1; i < t.first_column.size(); ++i) {
      if (sign(t.first_column[i]) != sign(t.first_column[i - 1])) ++changes;
    }
    return changes;
  }
  if (t.stop == Stop::ZeroRow) {
    zero_row = true;
    const Poly& a = t.aux;
    const int symmetric = (a.degree() - axis_multiplicity(a)) / 2;
    return symmetric + right_half_count(p / a, zero_row, depth + 1);
  }
  for (int k = 1; k <= 64; ++k) {
    Poly shifted = p * Poly{Rat(k), Rat(1)};
    if (build_table(shifted, false).stop != Stop::ZeroPivot) return right_half_count(shifted, zero_row, depth + 1);
  }
  throw Error(ErrorCode::InternalInconsistency, "Routh table kept hitting zero pivots");
}

}  // namespace

RouthResult routh_hurwitz(const Poly& p) {
  require_degree(p);
  RouthResult out;
  out.right_half_count = right_half_count(p, out.zero_row);
  // Certificate: the table with the derivative rule, on p or on p (s + k).
  Table table = build_table(p, true);
  for (int k = 1; table.stop == Stop::ZeroPivot && k <= 64; ++k) {
    table = build_table(p * Poly{Rat(k), Rat(1)}, true);
    out.shift_factor = k;
  }
  if (table.stop == Stop::Complete) {
    out.first_column = table.first_column;
  } else {
    out.shift_factor = 0;
  }
  if (axis_multiplicity(p) > 0) {
    out.verdict = RouthVerdict::Marginal;
  } else if (out.right_half_count == 0) {
    out.verdict = RouthVerdict::Stable;
  } else {
    out.verdict = RouthVerdict::Unstable;
  }
  return out;
}

bool hermite_biehler(const Poly& p) {
  require_degree(p);
  auto [qx, qy, qz] = freq_split(p);
  if (qx.is_zero() || qy.is_zero()) return false;
  return interlace(qx, qy) && cauchy_index(qx, qy) == qy.degree();
}

BezoutStability bezout_stability(const Poly& p) {
  require_degree(p);
  auto [qx, qy, qz] = freq_split(p);
  Definiteness d = definiteness(bezout_matrix(qx, qy, p.degree()));
  if (d == kStableBezoutDefiniteness) return BezoutStability::DefiniteStable;
  if (d == Definiteness::PosDef || d == Definiteness::NegDef) return BezoutStability::DefiniteAntiStable;
  return BezoutStability::NotDefinite;
}

std::string_view to_string(RouthVerdict v) {
  switch (v) {
    case RouthVerdict::Stable: return "Stable";
    case RouthVerdict::Marginal: return "Marginal";
    case RouthVerdict::Unstable: return "Unstable";
  }
  return "?";
}

std::string_view to_string(BezoutStability v) {
  switch (v) {
    case BezoutStability::DefiniteStable: return "DefiniteStable";
    case BezoutStability::DefiniteAntiStable: return "DefiniteAntiStable";
    case BezoutStability::NotDefinite: return "NotDefinite";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable: return "Stable";
    case Verdict::AntiStable: return "AntiStable";
    case Verdict::Unstable: return "Unstable";
    case Verdict::Marginal: return "Marginal";
  }
  return "?";
}

StabilityReport classify(const Poly& p) {
  require_degree(p);
  StabilityReport report;
  report.routh = routh_hurwitz(p);
  switch (report.routh.verdict) {
    case RouthVerdict::Stable: report.verdict = Verdict::Stable; break;
    case RouthVerdict::Marginal: report.verdict = Verdict::Marginal; break;
    case RouthVerdict::Unstable:
      report.verdict = report.routh.right_half_count == p.degree() ? Verdict::AntiStable : Verdict::Unstable;
      break;
  }

  auto [qx, qy, qz] = freq_split(p);
  report.bezout_signature = signature_exact(bezout_matrix(qx, qy, p.degree()));
  report.bezout = bezout_stability(p);
  if (!qx.is_zero() && !qy.is_zero()) {
    report.interlacing = interlace(qx, qy);
    report.cauchy_index_value = cauchy_index(qx, qy);
  }
  report.hermite_biehler = hermite_biehler(p);

  const bool stable = report.verdict == Verdict::Stable;
  const bool anti = report.verdict == Verdict::AntiStable;
  report.agreement = stable == report.hermite_biehler && stable == (report.bezout == BezoutStability::DefiniteStable) &&
                     anti == (report.bezout == BezoutStability::DefiniteAntiStable);
  if (!report.agreement) {
    throw Error(ErrorCode::InternalInconsistency,
                "criteria disagree for p = [" + to_text(p) + "]: Routh " +
                    std::string(to_string(report.routh.verdict)) + ", Hermite-Biehler " +
                    (report.hermite_biehler ? "true" : "false") + ", Bezoutian " +
                    std::string(to_string(report.bezout)));
  }
  return report;
}

}  // namespace freqlmi
