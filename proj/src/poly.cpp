#include "freqlmi/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "freqlmi/error.hpp"

namespace freqlmi {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Rat> ascending) : coeffs_(std::move(ascending)) { trim(); }

Poly Poly::from_descending(std::span<const Rat> descending) {
  return Poly(std::vector<Rat>(descending.rbegin(), descending.rend()));
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, int power) {
  std::vector<Rat> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::vector<Rat> Poly::descending() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

Rat Poly::operator[](int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rat& Poly::leading() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rat Poly::operator()(const Rat& t) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double Poly::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

Poly Poly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly r = *this;
  Rat lead = leading();
  for (auto& c : r.coeffs_) c /= lead;
  return r;
}

Poly Poly::reflected() const {
  Poly r = *this;
  for (std::size_t k = 1; k < r.coeffs_.size(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
  return r;
}

Poly Poly::scaled_argument(const Rat& c) const {
  std::vector<Rat> v = coeffs_;
  Rat power = 1;
  for (auto& coeff : v) {
    coeff *= power;
    power *= c;
  }
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  for (auto& coeff : coeffs_) coeff *= c;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rat> rem = a.coefficients();
  std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coefficients();
  const Rat& lead = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rat q = rem[static_cast<std::size_t>(k + b.degree())] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= q * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(b.degree()));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() < 1) return out;
  // Yun's algorithm.
  Poly f = p.monic();
  Poly df = f.derivative();
  Poly a = gcd(f, df);
  Poly b = f / a;
  Poly c = df / a;
  Poly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    Poly factor = gcd(b, d);
    if (factor.degree() > 0) out.emplace_back(factor, i);
    b = b / factor;
    c = d / factor;
    d = c - b.derivative();
  }
  return out;
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree part of zero");
  if (p.degree() < 1) return Poly::constant(1);
  return (p / gcd(p, p.derivative())).monic();
}

std::vector<Poly> sturm_chain(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm chain of zero");
  std::vector<Poly> chain{p};
  Poly next = p.derivative();
  while (!next.is_zero()) {
    chain.push_back(next);
    next = -(chain[chain.size() - 2] % chain.back());
  }
  return chain;
}

int sign_variations(std::span<const Poly> chain, const std::optional<Rat>& t, bool at_plus_infinity) {
  int variations = 0;
  int previous = 0;
  for (const auto& q : chain) {
    int s;
    if (t) {
      s = sign(q(*t));
    } else {
      s = sign(q.leading());
      if (!at_plus_infinity && q.degree() % 2 == 1) s = -s;
    }
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++variations;
    previous = s;
  }
  return variations;
}

namespace {

// Counts distinct roots in (lo, hi] of the squarefree polynomial whose chain is given.
int chain_count(std::span<const Poly> chain, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
  if (lo && hi && *lo >= *hi) return 0;
  return sign_variations(chain, lo, false) - sign_variations(chain, hi, true);
}

}  // namespace

int sturm_count(const Poly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
  Poly s = squarefree_part(p);
  if (s.degree() < 1) return 0;
  auto chain = sturm_chain(s);
  return chain_count(chain, lo, hi);
}

int count_roots_with_multiplicity(const Poly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
  int total = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) total += mult * sturm_count(factor, lo, hi);
  return total;
}

Rat root_bound(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root bound of zero");
  Rat m = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Rat r = abs(p[k] / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

RealRootReport real_roots(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "real roots of zero");
  RealRootReport report;
  if (p.degree() < 1) return report;

  Poly s = squarefree_part(p);
  auto chain = sturm_chain(s);
  Rat bound = root_bound(s);

  struct Pending {
    Rat lo, hi;
    int count;
  };
  std::vector<Pending> stack;
  int total = chain_count(chain, Rat(-bound), bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 1) {
      report.intervals.push_back({cur.lo, cur.hi, 1});
      continue;
    }
    Rat mid = (cur.lo + cur.hi) / 2;
    int left = chain_count(chain, cur.lo, mid);
    if (left > 0) stack.push_back({cur.lo, mid, left});
    if (cur.count - left > 0) stack.push_back({mid, cur.hi, cur.count - left});
  }
  std::sort(report.intervals.begin(), report.intervals.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });

  auto factors = squarefree_decomposition(p);
  for (auto& iv : report.intervals) {
    for (const auto& [factor, mult] : factors) {
      if (sturm_count(factor, iv.lo, iv.hi) == 1) {
        iv.multiplicity = mult;
        break;
      }
    }
    report.count_with_multiplicity += iv.multiplicity;
  }
  report.count_distinct = static_cast<int>(report.intervals.size());
  return report;
}

int sign_at_root(const Poly& q, const Poly& s, Rat& lo, Rat& hi) {
  auto s_chain = sturm_chain(s);
  Poly q_free = squarefree_part(q);
  std::vector<Poly> q_chain;
  if (q_free.degree() > 0) q_chain = sturm_chain(q_free);
  while (!q_chain.empty() && chain_count(q_chain, lo, hi) > 0) {
    Rat mid = (lo + hi) / 2;
    if (chain_count(s_chain, lo, mid) == 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return sign(q(hi));
}

FrequencySplit freq_split(const Poly& p) {
  if (p.degree() < 1) throw Error(ErrorCode::DegreeTooSmall, "frequency split needs degree >= 1");
  std::vector<Rat> re(static_cast<std::size_t>(p.degree()) + 1), im(re.size());
  for (int k = 0; k <= p.degree(); ++k) {
    // j^k is 1, j, -1, -j for k mod 4 = 0, 1, 2, 3.
    switch (k % 4) {
      case 0: re[static_cast<std::size_t>(k)] = p[k]; break;
      case 1: im[static_cast<std::size_t>(k)] = p[k]; break;
      case 2: re[static_cast<std::size_t>(k)] = -p[k]; break;
      case 3: im[static_cast<std::size_t>(k)] = -p[k]; break;
    }
  }
  return {Poly(std::move(re)), Poly(std::move(im)), Poly::constant(1)};
}

bool interlace(const Poly& g, const Poly& h) {
  if (g.is_zero() || h.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "interlace of zero polynomial");
  if (std::abs(g.degree() - h.degree()) != 1) return false;
  for (const Poly* q : {&g, &h}) {
    if (q->degree() == 0) continue;
    if (sturm_count(*q) != q->degree()) return false;  // complex or repeated roots
  }
  if (gcd(g, h).degree() > 0) return false;

  Poly product = g * h;
  if (product.degree() < 1) return true;
  RealRootReport roots = real_roots(product);
  int previous = -1;
  for (const auto& iv : roots.intervals) {
    int owner = sturm_count(g, iv.lo, iv.hi) == 1 ? 0 : 1;
    if (owner == previous) return false;
    previous = owner;
  }
  return true;
}

int cauchy_index(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "Cauchy index with zero denominator");
  if (num.is_zero()) return 0;
  Poly common = gcd(num, den);
  Poly n = num / common;
  Poly d = den / common;

  int index = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(d)) {
    if (mult % 2 == 0) continue;  // even-order poles do not jump
    Poly d_mult = d;
    for (int k = 0; k < mult; ++k) d_mult = d_mult.derivative();
    for (auto iv : real_roots(factor).intervals) {
      int num_sign = sign_at_root(n, factor, iv.lo, iv.hi);
      int den_sign = sign_at_root(d_mult, factor, iv.lo, iv.hi);
      index += num_sign * den_sign > 0 ? 1 : -1;
    }
  }
  return index;
}

std::string to_text(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& c : p.descending()) {
    if (!out.empty()) out += ' ';
    out += to_string(c);
  }
  return out;
}

Poly parse_poly(std::span<const std::string> tokens, bool ascending) {
  std::vector<Rat> coeffs;
  for (const auto& tok : tokens) {
    std::istringstream split(tok);
    std::string piece;
    while (split >> piece) coeffs.push_back(parse_rat(piece));
  }
  if (coeffs.empty()) throw Error(ErrorCode::ParseError, "no coefficients given");
  if (ascending) return Poly(std::move(coeffs));
  return Poly::from_descending(coeffs);
}

Poly parse_poly(std::string_view text, bool ascending) {
  std::vector<std::string> one{std::string(text)};
  return parse_poly(one, ascending);
}

namespace {

// Appends "c*var^k" with sign handling; `first` tracks the leading term.
void append_term(std::string& out, const Rat& c, const std::string& monomial, bool& first) {
  Rat mag = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  first = false;
  if (monomial.empty()) {
    out += to_string(mag);
  } else if (mag == 1) {
    out += monomial;
  } else {
    out += to_string(mag) + "*" + monomial;
  }
}

std::string power_of(std::string_view var, int k) {
  if (k == 0) return "";
  std::string s(var);
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

}  // namespace

std::string to_expression(const Poly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p[k] != 0) append_term(out, p[k], power_of(var, k), first);
  }
  return out;
}

// ---------------------------------------------------------------- Poly2

Poly2::Poly2(std::vector<std::vector<Rat>> grid) : grid_(std::move(grid)) { trim(); }

Poly2 Poly2::constant(const Rat& c) { return Poly2({{c}}); }
Poly2 Poly2::x() { return Poly2({{0}, {1}}); }
Poly2 Poly2::y() { return Poly2({{0, 1}}); }

void Poly2::trim() {
  for (auto& row : grid_) {
    while (!row.empty() && row.back() == 0) row.pop_back();
  }
  while (!grid_.empty() && grid_.back().empty()) grid_.pop_back();
}

int Poly2::total_degree() const {
  int d = -1;
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    for (std::size_t j = 0; j < grid_[i].size(); ++j) {
      if (grid_[i][j] != 0) d = std::max(d, static_cast<int>(i + j));
    }
  }
  return d;
}

int Poly2::degree_y() const {
  int d = -1;
  for (const auto& row : grid_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

Rat Poly2::coefficient(int i, int j) const {
  if (i < 0 || j < 0 || i >= static_cast<int>(grid_.size())) return 0;
  const auto& row = grid_[static_cast<std::size_t>(i)];
  if (j >= static_cast<int>(row.size())) return 0;
  return row[static_cast<std::size_t>(j)];
}

void Poly2::set_coefficient(int i, int j, const Rat& c) {
  if (i < 0 || j < 0) throw Error(ErrorCode::BadArgument, "negative exponent");
  auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
  if (ui >= grid_.size()) grid_.resize(ui + 1);
  if (uj >= grid_[ui].size()) grid_[ui].resize(uj + 1);
  grid_[ui][uj] = c;
  trim();
}

std::vector<std::tuple<int, int, Rat>> Poly2::terms() const {
  std::vector<std::tuple<int, int, Rat>> out;
  for (int d = 0; d <= total_degree(); ++d) {
    for (int i = d; i >= 0; --i) {
      Rat c = coefficient(i, d - i);
      if (c != 0) out.emplace_back(i, d - i, c);
    }
  }
  return out;
}

Rat Poly2::operator()(const Rat& x, const Rat& y) const {
  Rat acc = 0;
  for (auto row = grid_.rbegin(); row != grid_.rend(); ++row) {
    Rat inner = 0;
    for (auto c = row->rbegin(); c != row->rend(); ++c) inner = inner * y + *c;
    acc = acc * x + inner;
  }
  return acc;
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& row : r.grid_) {
    for (auto& c : row) c = -c;
  }
  return r;
}

Poly2& Poly2::operator+=(const Poly2& other) {
  if (other.grid_.size() > grid_.size()) grid_.resize(other.grid_.size());
  for (std::size_t i = 0; i < other.grid_.size(); ++i) {
    auto& row = grid_[i];
    const auto& orow = other.grid_[i];
    if (orow.size() > row.size()) row.resize(orow.size());
    for (std::size_t j = 0; j < orow.size(); ++j) row[j] += orow[j];
  }
  trim();
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& other) { return *this += -other; }

Poly2& Poly2::operator*=(const Rat& c) {
  for (auto& row : grid_) {
    for (auto& v : row) v *= c;
  }
  trim();
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::vector<Rat>> g(a.grid_.size() + b.grid_.size() - 1,
                                  std::vector<Rat>(static_cast<std::size_t>(a.degree_y() + b.degree_y()) + 1));
  for (std::size_t i1 = 0; i1 < a.grid_.size(); ++i1) {
    for (std::size_t j1 = 0; j1 < a.grid_[i1].size(); ++j1) {
      if (a.grid_[i1][j1] == 0) continue;
      for (std::size_t i2 = 0; i2 < b.grid_.size(); ++i2) {
        for (std::size_t j2 = 0; j2 < b.grid_[i2].size(); ++j2) {
          g[i1 + i2][j1 + j2] += a.grid_[i1][j1] * b.grid_[i2][j2];
        }
      }
    }
  }
  return Poly2(std::move(g));
}

Rat eval2(const Poly2& f, const Rat& x, const Rat& y) { return f(x, y); }

Poly restrict_segment(const Poly2& f, const Rat& target_x, const Rat& target_y) {
  int deg = std::max(f.total_degree(), 0);
  std::vector<Rat> u(static_cast<std::size_t>(deg) + 1);
  for (const auto& [i, j, c] : f.terms()) {
    Rat term = c;
    for (int k = 0; k < i; ++k) term *= target_x;
    for (int k = 0; k < j; ++k) term *= target_y;
    u[static_cast<std::size_t>(i + j)] += term;
  }
  return Poly(std::move(u));
}

Poly restrict_line(const Poly2& f, const Rat& cos_theta, const Rat& sin_theta) {
  if (cos_theta == 0 && sin_theta == 0) throw Error(ErrorCode::ZeroDirection, "line direction is (0, 0)");
  return restrict_segment(f, cos_theta, sin_theta);
}

std::string to_expression(const Poly2& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, j, c] : f.terms()) {
    std::string mono = power_of("x", i);
    std::string ypart = power_of("y", j);
    if (!mono.empty() && !ypart.empty()) mono += "*";
    mono += ypart;
    append_term(out, c, mono, first);
  }
  return out;
}

}  // namespace freqlmi
