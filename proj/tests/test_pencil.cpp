#include <doctest.h>

#include <regex>

#include "freqlmi/error.hpp"
#include "freqlmi/pencil.hpp"
#include "oracles.hpp"

using namespace freqlmi;

namespace {

Poly desc(std::vector<Rat> c) { return Poly::from_descending(c); }

const Poly kCubic = desc({1, 1, 4, 1});
const Poly kQuartic = desc({1, 0, 0, -1, -1});
const Poly kEighth = Poly{Rat(336), Rat(198), Rat(496), Rat(117), Rat(183), Rat(20), Rat(24), Rat(1), Rat(1)};

// Parses an affine entry such as "-336+x", "-24y" or "6720-20x" into
// (constant, x coefficient, y coefficient).
std::array<Rat, 3> affine(const std::string& text) {
  std::array<Rat, 3> out{0, 0, 0};
  static const std::regex term(R"(([+-]?)(\d*)([xy]?))");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), term); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (m.length(0) == 0) continue;
    Rat c = m.str(2).empty() ? Rat(1) : Rat(mpz_class(m.str(2)));
    if (m.str(1) == "-") c = -c;
    const std::string var = m.str(3);
    out[var.empty() ? 0 : (var == "x" ? 1 : 2)] += c;
  }
  return out;
}

Pencil pencil_from_text(const std::vector<std::vector<std::string>>& rows) {
  const std::size_t n = rows.size();
  SymMat f0(n), fx(n), fy(n);
  std::vector<std::vector<Rat>> g0(n, std::vector<Rat>(n)), gx = g0, gy = g0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto a = affine(rows[i][j]);
      g0[i][j] = a[0];
      gx[i][j] = a[1];
      gy[i][j] = a[2];
    }
  }
  return Pencil(SymMat(g0), SymMat(gx), SymMat(gy));
}

// Reference eighth-degree LMI.
const std::vector<std::vector<std::string>> kEighthReference = {
    {"1", "0", "-20", "0", "117", "0", "-198", "y"},
    {"0", "4", "0", "-66", "0", "298", "y", "-336+x"},
    {"-20", "0", "414", "0", "-2510", "y", "4416+x", "-24y"},
    {"0", "-66", "0", "1150", "y", "-5504+x", "-24y", "6720-20x"},
    {"117", "0", "-2510", "y", "15907+x", "-24y", "-29514-20x", "183y"},
    {"0", "298", "y", "-5504+x", "-24y", "28518-20x", "183y", "-39312+117x"},
    {"-198", "y", "4416+x", "-24y", "-29514-20x", "183y", "58896+117x", "-496y"},
    {"y", "-336+x", "-24y", "6720-20x", "183y", "-39312+117x", "-496y", "66528-198x"},
};

bool same_parts(const Pencil& a, const Pencil& b) { return a.f0() == b.f0() && a.fx() == b.fx() && a.fy() == b.fy(); }

Poly2 cubic_f() { return Poly2({{9, 0, -1}, {-3}, {-5}, {-1}}); }

}  // namespace

TEST_CASE("cubic pencil after sign normalization") {
  Pencil pc = normalize_sign(build_pencil(kCubic));
  CHECK(pc.sigma() == -1);
  Pencil expected = pencil_from_text({{"1", "0", "-1+x"}, {"0", "3+x", "-y"}, {"-1+x", "-y", "4-4x"}});
  CHECK(same_parts(pc, expected));
  CHECK(definiteness(pc.f0()) == Definiteness::PosDef);
}

TEST_CASE("quartic pencil matches the reference matrix up to sign") {
  Pencil raw = build_pencil(kQuartic);
  Pencil expected = pencil_from_text({{"0", "0", "1", "y"}, {"0", "1", "y", "0"}, {"1", "y", "0", "0"}, {"y", "0", "0", "1+x"}});
  CHECK(raw.f0() == -expected.f0());
  CHECK(raw.fx() == -expected.fx());
  CHECK(raw.fy() == -expected.fy());
  CHECK(signature_exact(expected.f0()) == Signature{3, 1, 0});
}

TEST_CASE("first-order pencil") {
  Pencil pc = normalize_sign(build_pencil(desc({1, 1})));
  CHECK(pc.size() == 1);
  CHECK(pc.f0()(0, 0) == 1);
  CHECK(pc.fx()(0, 0) == -1);
  CHECK(pc.fy()(0, 0) == 0);
  CHECK(implicit_poly(pc) == Poly2({{1}, {-1}}));
}

TEST_CASE("eighth-degree pencil matches the reference LMI entry for entry") {
  Pencil pc = normalize_sign(build_pencil(kEighth));
  CHECK(pc.sigma() == -1);
  CHECK(same_parts(pc, pencil_from_text(kEighthReference)));
  CHECK(pc.fy()(0, 7) == 1);
  CHECK(pc.f0()(1, 7) == -336);
  CHECK(pc.fx()(1, 7) == 1);
  CHECK(pc.f0()(7, 7) == 66528);
  CHECK(pc.fx()(7, 7) == -198);
}

TEST_CASE("normalize_sign") {
  try {
    normalize_sign(build_pencil(kQuartic));
    FAIL("expected NotDefinite");
  } catch (const NotDefiniteError& e) {
    CHECK(e.code() == ErrorCode::NotDefinite);
    CHECK(e.signature() == Signature{1, 3, 0});
  }
  Pencil first = normalize_sign(build_pencil(desc({1, 1})));
  Pencil already = normalize_sign(first);
  CHECK(already.sigma() == -1);
  CHECK(same_parts(first, already));
  // A pencil that is PosDef as built keeps sigma = +1.
  Pencil pos(SymMat::identity(1), SymMat::identity(1) * Rat(-1), SymMat(1));
  CHECK(normalize_sign(pos).sigma() == 1);
  CHECK_THROWS_AS(build_pencil(Poly::constant(2)), Error);
}

TEST_CASE("pencil_eval") {
  Pencil pc = normalize_sign(build_pencil(kCubic));
  CHECK(pencil_eval(pc, 0, 0) == SymMat({{1, 0, -1}, {0, 3, 0}, {-1, 0, 4}}));
  CHECK(pencil_eval(pc, 1, 0) == SymMat({{1, 0, 0}, {0, 4, 0}, {0, 0, 0}}));
  CHECK(pencil_eval(pc, -5, 0) == SymMat({{1, 0, -6}, {0, -2, 0}, {-6, 0, 24}}));
}

TEST_CASE("implicit_poly") {
  CHECK(implicit_poly(normalize_sign(build_pencil(kCubic))) == cubic_f());
  CHECK(implicit_poly(build_pencil(kQuartic)) == Poly2({{-1, 0, 0, 0, 1}, {-1}}));
  // The unnormalized odd-size pencil flips the sign of f.
  CHECK(implicit_poly(build_pencil(kCubic)) == -cubic_f());
}

TEST_CASE("implicit_poly agrees with symbolic Leibniz expansion") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    Poly p = oracle::random_poly(rng, 1 + trial % 5, -6, 6);
    Pencil pc = build_pencil(p);
    const std::size_t n = pc.size();
    std::vector<std::vector<Poly2>> entries(n, std::vector<Poly2>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        entries[i][j] = Poly2::constant(pc.f0()(i, j)) + Poly2::x() * pc.fx()(i, j) + Poly2::y() * pc.fy()(i, j);
      }
    }
    Poly2 f = implicit_poly(pc);
    CHECK(f == oracle::det_leibniz(entries));
    CHECK(f.total_degree() <= static_cast<int>(n));
  }
}

TEST_CASE("implicit curve passes through every frequency sample") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 16; ++trial) {
    Poly p = oracle::random_poly(rng, 1 + trial % 8, -9, 9);
    Poly2 f = implicit_poly(build_pencil(p));
    auto [qx, qy, qz] = freq_split(p);
    for (int k = 0; k < 10; ++k) {
      Rat w = oracle::random_rat(rng, -10, 10, 9);
      CHECK(eval2(f, qx(w), qy(w)) == 0);
    }
  }
}

TEST_CASE("pencil is linear in x and y") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    Pencil pc = build_pencil(oracle::random_poly(rng, 1 + trial % 8, -9, 9));
    Rat x = oracle::random_rat(rng, -9, 9, 5), y = oracle::random_rat(rng, -9, 9, 5);
    CHECK(pencil_eval(pc, x, y) - pencil_eval(pc, 0, 0) == x * pc.fx() + y * pc.fy());
  }
}

TEST_CASE("membership on the cubic") {
  Pencil pc = normalize_sign(build_pencil(kCubic));
  auto origin = membership(pc, 0, 0);
  CHECK(origin.status == Membership::Interior);
  CHECK(origin.exact_det == 9);

  auto edge = membership(pc, 1, 0);
  CHECK(edge.status == Membership::Boundary);
  CHECK(edge.exact_det == 0);
  CHECK(std::abs(edge.min_eig) <= 1e-9);

  auto far = membership(pc, -5, 0);
  CHECK(far.status == Membership::Exterior);
  CHECK(eval2(cubic_f(), -5, 0) == 24);
  CHECK(far.exact_det == 24);

  CHECK_THROWS_AS(membership(build_pencil(kCubic), 0, 0), Error);
  CHECK_THROWS_AS(membership_approx(build_pencil(kCubic), 0, 0), Error);

  CHECK(membership_approx(pc, 0.0, 0.0).status == Membership::Interior);
  CHECK(membership_approx(pc, 1.0, 0.0).status == Membership::Boundary);
  CHECK(membership_approx(pc, -5.0, 0.0).status == Membership::Exterior);
}

TEST_CASE("stable pencils: origin inside, boundary on the curve, midpoint convexity") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 6; ++trial) {
    Poly p = oracle::random_stable_poly(rng, 2 + trial % 5);
    Pencil pc = normalize_sign(build_pencil(p));
    Poly2 f = implicit_poly(pc);
    CHECK(membership(pc, 0, 0).status == Membership::Interior);
    CHECK(det_exact(pc.f0()) > 0);

    // Boundary points are exactly on the curve: F(q_x(w), q_y(w)) restricted to
    // the LMI boundary has det 0.
    auto [qx, qy, qz] = freq_split(p);
    for (int k = 0; k < 5; ++k) {
      Rat w = oracle::random_rat(rng, -6, 6, 4);
      auto m = membership(pc, qx(w), qy(w));
      CHECK(m.exact_det == 0);
      if (m.status == Membership::Boundary) CHECK(eval2(f, qx(w), qy(w)) == 0);
      CHECK(m.status != Membership::Interior);
    }

    std::vector<std::pair<Rat, Rat>> inside;
    for (int k = 0; k < 300 && inside.size() < 40; ++k) {
      Rat x = oracle::random_rat(rng, -40, 40, 4), y = oracle::random_rat(rng, -40, 40, 4);
      if (membership(pc, x, y).status == Membership::Interior) inside.emplace_back(x, y);
    }
    for (std::size_t a = 0; a + 1 < inside.size(); ++a) {
      Rat mx = (inside[a].first + inside[a + 1].first) / 2;
      Rat my = (inside[a].second + inside[a + 1].second) / 2;
      CHECK(membership(pc, mx, my).status != Membership::Exterior);
    }
  }
}
