#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "freqlmi/rational.hpp"

namespace freqlmi {

/// Univariate polynomial with exact rational coefficients, stored by
/// ascending power. Trailing zeros are always trimmed, so the zero
/// polynomial is the empty coefficient list and has degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> ascending);
  Poly(std::initializer_list<Rat> ascending) : Poly(std::vector<Rat>(ascending)) {}

  /// Builds from highest power first, e.g. {1, 1, 4, 1} is s^3 + s^2 + 4s + 1.
  static Poly from_descending(std::span<const Rat> descending);
  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, int power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coefficients() const { return coeffs_; }
  std::vector<Rat> descending() const;

  /// Coefficient of t^k; zero outside the stored range.
  Rat operator[](int k) const;
  const Rat& leading() const;

  Rat operator()(const Rat& t) const;
  double operator()(double t) const;

  Poly derivative() const;
  Poly monic() const;
  /// p(-t).
  Poly reflected() const;
  /// p(c t).
  Poly scaled_argument(const Rat& c) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Quotient and remainder of exact division; throws ZeroPolynomial for b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Yun's decomposition p = c * prod_i f_i^i with squarefree, pairwise coprime
/// monic f_i. Only factors of positive degree are returned, paired with i.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);
Poly squarefree_part(const Poly& p);

/// Canonical Sturm sequence p, p', -rem(...), ... of a nonzero polynomial.
std::vector<Poly> sturm_chain(const Poly& p);

/// Sign variations of a Sturm chain at t, or at -inf / +inf when t is empty.
int sign_variations(std::span<const Poly> chain, const std::optional<Rat>& t, bool at_plus_infinity);

/// Number of distinct real roots in (lo, hi]. An empty bound means infinity
/// on that side. Throws ZeroPolynomial.
int sturm_count(const Poly& p, const std::optional<Rat>& lo = std::nullopt,
                const std::optional<Rat>& hi = std::nullopt);

/// Real roots in (lo, hi] counted with multiplicity.
int count_roots_with_multiplicity(const Poly& p, const std::optional<Rat>& lo = std::nullopt,
                                  const std::optional<Rat>& hi = std::nullopt);

/// Half-open isolating interval (lo, hi] holding one distinct real root.
struct RootInterval {
  Rat lo;
  Rat hi;
  int multiplicity = 1;
};

struct RealRootReport {
  int count_distinct = 0;
  int count_with_multiplicity = 0;
  std::vector<RootInterval> intervals;  // sorted, pairwise disjoint
};

/// Isolates every real root. Throws ZeroPolynomial.
RealRootReport real_roots(const Poly& p);

/// Bound B with every real root in (-B, B].
Rat root_bound(const Poly& p);

/// Sign of q at the unique root of squarefree s in (lo, hi]. q must not
/// vanish there. The interval is refined in place.
int sign_at_root(const Poly& q, const Poly& s, Rat& lo, Rat& hi);

/// Real and imaginary parts of p(j w): q_x, q_y and the constant q_z = 1.
struct FrequencySplit {
  Poly qx;
  Poly qy;
  Poly qz;
};

/// Throws DegreeTooSmall when degree(p) < 1.
FrequencySplit freq_split(const Poly& p);

/// True iff g and h are real-rooted with simple roots, their degrees differ
/// by one, and their roots strictly alternate. Throws ZeroPolynomial.
bool interlace(const Poly& g, const Poly& h);

/// Cauchy index of num/den over the real line (jumps -inf -> +inf minus
/// jumps +inf -> -inf). A common factor is cancelled first.
/// Throws ZeroDenominator.
int cauchy_index(const Poly& num, const Poly& den);

/// Descending coefficients separated by single spaces.
std::string to_text(const Poly& p);
/// Parses whitespace-separated coefficients, descending unless `ascending`.
Poly parse_poly(std::string_view text, bool ascending = false);
Poly parse_poly(std::span<const std::string> tokens, bool ascending = false);

/// Human-readable form in the variable `var`, lowest power first.
std::string to_expression(const Poly& p, std::string_view var = "s");

/// Bivariate polynomial f(x, y) = sum c[i][j] x^i y^j with exact coefficients.
class Poly2 {
 public:
  Poly2() = default;
  /// grid[i][j] is the coefficient of x^i y^j; rows may be ragged.
  explicit Poly2(std::vector<std::vector<Rat>> grid);

  static Poly2 constant(const Rat& c);
  static Poly2 x();
  static Poly2 y();

  bool is_zero() const { return grid_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_x() const { return static_cast<int>(grid_.size()) - 1; }
  int degree_y() const;

  Rat coefficient(int i, int j) const;
  void set_coefficient(int i, int j, const Rat& c);

  /// Nonzero terms as (x power, y power, coefficient), ordered by total
  /// degree then by descending x power.
  std::vector<std::tuple<int, int, Rat>> terms() const;

  Rat operator()(const Rat& x, const Rat& y) const;

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& other);
  Poly2& operator-=(const Poly2& other);
  Poly2& operator*=(const Rat& c);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(Poly2 a, const Rat& c) { return a *= c; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.grid_ == b.grid_; }

 private:
  void trim();
  std::vector<std::vector<Rat>> grid_;
};

Rat eval2(const Poly2& f, const Rat& x, const Rat& y);

/// u(t) = f(t cos, t sin) for a rational (not necessarily unit) direction.
/// Throws ZeroDirection for (0, 0).
Poly restrict_line(const Poly2& f, const Rat& cos_theta, const Rat& sin_theta);

/// u(t) = f(t x, t y): the segment from the origin (t = 0) to the target (t = 1).
Poly restrict_segment(const Poly2& f, const Rat& target_x, const Rat& target_y);

/// e.g. "9 - 3*x - 5*x^2 - y^2 - x^3".
std::string to_expression(const Poly2& f);

}  // namespace freqlmi
