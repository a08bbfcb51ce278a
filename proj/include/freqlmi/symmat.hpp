#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "freqlmi/poly.hpp"
#include "freqlmi/rational.hpp"

namespace freqlmi {

/// Dense symmetric matrix of exact rationals. Symmetry is checked when the
/// matrix is built from a full grid and preserved by every operation.
class SymMat {
 public:
  SymMat() = default;
  /// Zero matrix of the given size.
  explicit SymMat(std::size_t n);
  /// Throws NotSymmetric / BadArgument for non-square or asymmetric input.
  explicit SymMat(const std::vector<std::vector<Rat>>& rows);

  static SymMat identity(std::size_t n);
  static SymMat diagonal(std::span<const Rat> d);

  std::size_t size() const { return n_; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  /// Writes both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, const Rat& value);

  std::vector<std::vector<Rat>> rows() const;
  std::vector<double> to_double() const;  // row-major
  Rat max_abs() const;

  SymMat operator-() const;
  SymMat& operator+=(const SymMat& other);
  SymMat& operator-=(const SymMat& other);
  SymMat& operator*=(const Rat& c);
  friend SymMat operator+(SymMat a, const SymMat& b) { return a += b; }
  friend SymMat operator-(SymMat a, const SymMat& b) { return a -= b; }
  friend SymMat operator*(SymMat a, const Rat& c) { return a *= c; }
  friend SymMat operator*(const Rat& c, SymMat a) { return a *= c; }
  friend bool operator==(const SymMat& a, const SymMat& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

 private:
  std::size_t n_ = 0;
  std::vector<Rat> a_;
};

struct Signature {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

enum class Definiteness { PosDef, NegDef, PosSemi, NegSemi, Indefinite, Zero };

std::string_view to_string(Definiteness d);

Rat det_exact(const SymMat& m);

/// det(t I - m) by Berkowitz's division-free recurrence.
Poly characteristic_poly(const SymMat& m);

/// Inertia from a Sturm count on the characteristic polynomial.
Signature signature_exact(const SymMat& m);

Definiteness definiteness(const SymMat& m);

/// Smallest eigenvalue by cyclic Jacobi rotations on the double image of m,
/// accurate to tol * (1 + max|m_ij|).
double min_eig_approx(const SymMat& m, double tol);

/// Same kernel on a row-major double matrix.
double min_eig_approx(std::span<const double> rowmajor, std::size_t n, double tol);

}  // namespace freqlmi
