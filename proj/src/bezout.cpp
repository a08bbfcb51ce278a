#include "freqlmi/bezout.hpp"

#include <algorithm>

#include "freqlmi/error.hpp"

namespace freqlmi {

SymMat bezout_matrix(const BezoutSpec& spec) {
  const int n = spec.size;
  if (n < 1 || n < std::max(spec.g.degree(), spec.h.degree())) {
    throw Error(ErrorCode::SizeTooSmall, "Bezoutian size " + std::to_string(n) + " below degree " +
                                             std::to_string(std::max(spec.g.degree(), spec.h.degree())));
  }
  const int top = std::max(spec.g.degree(), spec.h.degree());
  // For a > b the pair of terms g_a h_b and g_b h_a contributes
  // (g_a h_b - g_b h_a) (w^a v^b - w^b v^a) / (w - v)
  //   = (g_a h_b - g_b h_a) sum_{k=0}^{a-b-1} w^(b+k) v^(a-1-k).
  std::vector<Rat> c(static_cast<std::size_t>(n * n));  // c[k * n + l] multiplies w^k v^l
  for (int a = 1; a <= top; ++a) {
    for (int b = 0; b < a; ++b) {
      Rat weight = spec.g[a] * spec.h[b] - spec.g[b] * spec.h[a];
      if (weight == 0) continue;
      for (int k = 0; k < a - b; ++k) c[static_cast<std::size_t>((b + k) * n + (a - 1 - k))] += weight;
    }
  }
  SymMat out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      out.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
              c[static_cast<std::size_t>((n - 1 - i) * n + (n - 1 - j))]);
    }
  }
  return out;
}

SymMat bezout_matrix(const Poly& g, const Poly& h, int size) { return bezout_matrix(BezoutSpec{g, h, size}); }

Rat resultant(const Poly& g, const Poly& h, int size) { return det_exact(bezout_matrix(g, h, size)); }

}  // namespace freqlmi
