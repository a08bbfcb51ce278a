#include <doctest.h>

#include <cmath>

#include "freqlmi/error.hpp"
#include "freqlmi/symmat.hpp"
#include "oracles.hpp"

using namespace freqlmi;

namespace {

SymMat mat(std::vector<std::vector<Rat>> rows) { return SymMat(rows); }

const SymMat kCubicF00 = mat({{1, 0, -1}, {0, 3, 0}, {-1, 0, 4}});
const SymMat kBxy = mat({{-1, 0, 1}, {0, -3, 0}, {1, 0, -4}});
const SymMat kQuarticF00 = mat({{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}});

}  // namespace

TEST_CASE("rationals parse integers, fractions and decimals") {
  CHECK(parse_rat("-3") == Rat(-3));
  CHECK(parse_rat("6/4") == Rat(3, 2));
  CHECK(parse_rat("-1.25") == Rat(-5, 4));
  CHECK(parse_rat("2.5e-1") == Rat(1, 4));
  CHECK(parse_rat("+7") == Rat(7));
  CHECK(to_string(Rat(-6, 4)) == "-3/2");
  CHECK(to_string(Rat(5)) == "5");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("abc"), Error);
  CHECK_THROWS_AS(parse_rat(""), Error);
  CHECK(from_double(0.5) == Rat(1, 2));
}

TEST_CASE("SymMat rejects asymmetric input") {
  CHECK_THROWS_AS(mat({{1, 2}, {3, 4}}), Error);
  CHECK_THROWS_AS(mat({{1, 2}}), Error);
  SymMat m(2);
  m.set(0, 1, 5);
  CHECK(m(1, 0) == 5);
}

TEST_CASE("det_exact") {
  CHECK(det_exact(kCubicF00) == 9);
  CHECK(det_exact(SymMat::identity(3)) == 1);
  CHECK(det_exact(kQuarticF00) == -1);
  CHECK(det_exact(SymMat(3)) == 0);
}

TEST_CASE("det_exact matches permutation expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = oracle::random_symmat(rng, 1 + trial % 6, -5, 5);
    CHECK(det_exact(m) == oracle::det_leibniz(m.rows()));
  }
}

TEST_CASE("characteristic polynomial: det(-m) = chi(0) up to sign") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = oracle::random_symmat(rng, 1 + trial % 7, -4, 4);
    Poly chi = characteristic_poly(m);
    CHECK(chi.degree() == static_cast<int>(m.size()));
    CHECK(chi.leading() == 1);
    Rat expected = (m.size() % 2 == 0 ? 1 : -1) * det_exact(m);
    CHECK(chi[0] == expected);
    // chi(t) = det(t I - m) at a few integer points.
    for (int t = -2; t <= 2; ++t) {
      SymMat shifted = SymMat::identity(m.size()) * Rat(t) - m;
      CHECK(chi(Rat(t)) == oracle::det_leibniz(shifted.rows()));
    }
  }
}

TEST_CASE("signature_exact") {
  CHECK(signature_exact(kBxy) == Signature{0, 3, 0});
  CHECK(signature_exact(SymMat(2)) == Signature{0, 0, 2});
  CHECK(signature_exact(kQuarticF00) == Signature{3, 1, 0});
  std::vector<Rat> d{2, 0, -1, 0};
  CHECK(signature_exact(SymMat::diagonal(d)) == Signature{1, 1, 2});
}

TEST_CASE("definiteness") {
  CHECK(definiteness(kCubicF00) == Definiteness::PosDef);
  CHECK(definiteness(kBxy) == Definiteness::NegDef);
  std::vector<Rat> d{1, 0};
  CHECK(definiteness(SymMat::diagonal(d)) == Definiteness::PosSemi);
  std::vector<Rat> nd{0, -2};
  CHECK(definiteness(SymMat::diagonal(nd)) == Definiteness::NegSemi);
  CHECK(definiteness(kQuarticF00) == Definiteness::Indefinite);
  CHECK(definiteness(SymMat(3)) == Definiteness::Zero);
  // Leading minor zero but matrix PSD: the Sylvester shortcut must not decide.
  CHECK(definiteness(mat({{0, 0}, {0, 1}})) == Definiteness::PosSemi);
  CHECK(definiteness(mat({{1, 1}, {1, 1}})) == Definiteness::PosSemi);
}

TEST_CASE("min_eig_approx") {
  CHECK(min_eig_approx(SymMat::identity(3), 1e-9) == doctest::Approx(1.0).epsilon(1e-9));
  std::vector<Rat> d{5, -2};
  CHECK(std::abs(min_eig_approx(SymMat::diagonal(d), 1e-9) + 2.0) <= 1e-9);
  SymMat f10 = mat({{1, 0, 0}, {0, 4, 0}, {0, 0, 0}});
  CHECK(std::abs(min_eig_approx(f10, 1e-9)) <= 1e-9);
  CHECK_THROWS_AS(min_eig_approx(f10, 0.0), Error);
}

TEST_CASE("properties on random symmetric matrices") {
  std::mt19937_64 rng(13);
  const double tol = 1e-9;
  int decided = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 8;
    auto m = oracle::random_symmat(rng, n, -6, 6);
    if (trial % 3 == 0) {
      // Push some matrices to be definite by adding a diagonal shift.
      m += SymMat::identity(n) * Rat(static_cast<long>(6 * n));
    }
    Signature sig = signature_exact(m);
    CHECK(sig.n_plus + sig.n_minus + sig.n_zero == static_cast<int>(n));

    Rat det = det_exact(m);
    if (sig.n_zero > 0) {
      CHECK(det == 0);
    } else {
      CHECK(sign(det) == (sig.n_minus % 2 == 0 ? 1 : -1));
    }
    CHECK((definiteness(m) == Definiteness::PosDef) == (sig == Signature{static_cast<int>(n), 0, 0}));

    double approx = min_eig_approx(m, tol);
    double ref = oracle::min_eig_reference(m);
    double scale = to_double(m.max_abs());
    CHECK(std::abs(approx - ref) <= tol * (1 + scale));
    if (std::abs(approx) > 10 * tol) {
      ++decided;
      bool pd = definiteness(m) == Definiteness::PosDef;
      CHECK(pd == (approx > 0));
    }
  }
  CHECK(decided > 100);
}
