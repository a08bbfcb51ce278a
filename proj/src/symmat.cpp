#include "freqlmi/symmat.hpp"

#include <algorithm>
#include <cmath>

#include "freqlmi/error.hpp"

namespace freqlmi {

SymMat::SymMat(std::size_t n) : n_(n), a_(n * n) {}

SymMat::SymMat(const std::vector<std::vector<Rat>>& rows) : SymMat(rows.size()) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw Error(ErrorCode::BadArgument, "matrix is not square");
    for (std::size_t j = 0; j < n_; ++j) a_[i * n_ + j] = rows[i][j];
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (a_[i * n_ + j] != a_[j * n_ + i]) {
        throw Error(ErrorCode::NotSymmetric,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs from its transpose");
      }
    }
  }
}

SymMat SymMat::identity(std::size_t n) {
  SymMat m(n);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
  return m;
}

SymMat SymMat::diagonal(std::span<const Rat> d) {
  SymMat m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.a_[i * d.size() + i] = d[i];
  return m;
}

void SymMat::set(std::size_t i, std::size_t j, const Rat& value) {
  a_[i * n_ + j] = value;
  a_[j * n_ + i] = value;
}

std::vector<std::vector<Rat>> SymMat::rows() const {
  std::vector<std::vector<Rat>> out(n_, std::vector<Rat>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = a_[i * n_ + j];
  }
  return out;
}

std::vector<double> SymMat::to_double() const {
  std::vector<double> out(a_.size());
  std::transform(a_.begin(), a_.end(), out.begin(), [](const Rat& r) { return r.get_d(); });
  return out;
}

Rat SymMat::max_abs() const {
  Rat m = 0;
  for (const auto& v : a_) {
    if (abs(v) > m) m = abs(v);
  }
  return m;
}

SymMat SymMat::operator-() const {
  SymMat r = *this;
  for (auto& v : r.a_) v = -v;
  return r;
}

SymMat& SymMat::operator+=(const SymMat& other) {
  if (other.n_ != n_) throw Error(ErrorCode::BadArgument, "matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
  return *this;
}

SymMat& SymMat::operator-=(const SymMat& other) {
  if (other.n_ != n_) throw Error(ErrorCode::BadArgument, "matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= other.a_[k];
  return *this;
}

SymMat& SymMat::operator*=(const Rat& c) {
  for (auto& v : a_) v *= c;
  return *this;
}

std::string_view to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PosDef: return "PosDef";
    case Definiteness::NegDef: return "NegDef";
    case Definiteness::PosSemi: return "PosSemi";
    case Definiteness::NegSemi: return "NegSemi";
    case Definiteness::Indefinite: return "Indefinite";
    case Definiteness::Zero: return "Zero";
  }
  return "?";
}

Rat det_exact(const SymMat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<Rat> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  }
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[col * n + j]);
      det = -det;
    }
    const Rat p = a[col * n + col];
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r * n + col] == 0) continue;
      Rat factor = a[r * n + col] / p;
      for (std::size_t j = col; j < n; ++j) a[r * n + j] -= factor * a[col * n + j];
    }
  }
  return det;
}

Poly characteristic_poly(const SymMat& m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(1);
  // desc[k] is the coefficient of t^(r - k) for the leading r x r block.
  std::vector<Rat> desc{1, -m(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R S, -R M S, ..., -R M^(r-1) S, where M is
    // the leading r x r block, R its row border and S its column border.
    std::vector<Rat> col(r + 2);
    col[0] = 1;
    col[1] = -m(r, r);
    std::vector<Rat> vec(r);  // M^k S
    for (std::size_t i = 0; i < r; ++i) vec[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Rat dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * vec[i];
      col[k + 2] = -dot;
      if (k + 1 == r) break;
      std::vector<Rat> next(r);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * vec[j];
      }
      vec = std::move(next);
    }
    std::vector<Rat> updated(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) updated[i] += col[i - j] * desc[j];
    }
    desc = std::move(updated);
  }
  return Poly::from_descending(desc);
}

Signature signature_exact(const SymMat& m) {
  const int n = static_cast<int>(m.size());
  Poly chi = characteristic_poly(m);
  Signature sig;
  while (sig.n_zero <= chi.degree() && chi[sig.n_zero] == 0) ++sig.n_zero;
  sig.n_plus = count_roots_with_multiplicity(chi, Rat(0), std::nullopt);
  sig.n_minus = n - sig.n_plus - sig.n_zero;
  return sig;
}

namespace {

// Pivot signs of unpivoted elimination equal the ratios of consecutive
// leading principal minors. Returns +1 / -1 when all pivots share that
// sign, 0 when the shortcut is inconclusive.
int sylvester_sign(const SymMat& m) {
  const std::size_t n = m.size();
  std::vector<Rat> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  }
  int common = 0;
  for (std::size_t col = 0; col < n; ++col) {
    const Rat p = a[col * n + col];
    int s = sign(p);
    if (s == 0 || (common != 0 && s != common)) return 0;
    common = s;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r * n + col] == 0) continue;
      Rat factor = a[r * n + col] / p;
      for (std::size_t j = col; j < n; ++j) a[r * n + j] -= factor * a[col * n + j];
    }
  }
  return common;
}

}  // namespace

Definiteness definiteness(const SymMat& m) {
  if (int s = sylvester_sign(m); s != 0) return s > 0 ? Definiteness::PosDef : Definiteness::NegDef;
  const Signature sig = signature_exact(m);
  const int n = static_cast<int>(m.size());
  if (sig.n_zero == n) return Definiteness::Zero;
  if (sig.n_plus == n) return Definiteness::PosDef;
  if (sig.n_minus == n) return Definiteness::NegDef;
  if (sig.n_minus == 0) return Definiteness::PosSemi;
  if (sig.n_plus == 0) return Definiteness::NegSemi;
  return Definiteness::Indefinite;
}

double min_eig_approx(std::span<const double> rowmajor, std::size_t n, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::BadArgument, "tolerance must be positive");
  if (n == 0) throw Error(ErrorCode::BadArgument, "empty matrix");
  std::vector<double> a(rowmajor.begin(), rowmajor.end());
  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  // Weyl: each eigenvalue is within the off-diagonal Frobenius norm of a diagonal entry.
  const double target = 0.25 * tol * (1.0 + scale);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
    }
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && off_norm() > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
      }
    }
  }
  double lo = a[0];
  for (std::size_t i = 1; i < n; ++i) lo = std::min(lo, a[i * n + i]);
  return lo;
}

double min_eig_approx(const SymMat& m, double tol) {
  return min_eig_approx(m.to_double(), m.size(), tol);
}

}  // namespace freqlmi
