#pragma once

#include "freqlmi/poly.hpp"
#include "freqlmi/symmat.hpp"

namespace freqlmi {

/// Inputs of a Bezoutian: the pair (g, h) and the matrix size, which may
/// exceed both degrees so that degree-deficient pairs still give the size a
/// caller needs (e.g. B(q_x, 1) at the size of the full pencil).
struct BezoutSpec {
  Poly g;
  Poly h;
  int size = 0;
};

/// Coefficient matrix of the Cayley quotient
///   (g(w) h(v) - g(v) h(w)) / (w - v) = sum b_kl w^k v^l
/// with rows and columns in descending powers: entry (i, j), zero-based,
/// holds b_{n-1-i, n-1-j}. Throws SizeTooSmall when size < max degree or
/// size < 1.
SymMat bezout_matrix(const BezoutSpec& spec);
SymMat bezout_matrix(const Poly& g, const Poly& h, int size);

/// det of the Bezoutian; zero exactly when g and h share a root.
Rat resultant(const Poly& g, const Poly& h, int size);

}  // namespace freqlmi
