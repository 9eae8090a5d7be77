#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "trotterlat/pauli.hpp"

using namespace trotterlat;

namespace {

PauliString random_string(std::mt19937& rng, std::uint32_t n, bool random_phase) {
  std::uniform_int_distribution<int> pauli(0, 3), phase(0, 3);
  PauliString p(n);
  for (std::uint32_t q = 0; q < n; ++q) p.set_pauli(q, pauli(rng));
  if (random_phase) p.multiply_phase_by_i(phase(rng));
  return p;
}

bool dense_equal(const oracle::Matrix& a, const oracle::Matrix& b, double tol = 1e-14) {
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

TEST_CASE("single-qubit products match the multiplication table") {
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      PauliString pa(1), pb(1);
      pa.set_pauli(0, a);
      pb.set_pauli(0, b);
      CHECK(dense_equal(oracle::pauli_dense(pa * pb),
                        oracle::pauli_dense(pa) * oracle::pauli_dense(pb)));
    }
  }
  CHECK((PauliString::from_label("X") * PauliString::from_label("X")).is_identity());
  CHECK((PauliString::from_label("X") * PauliString::from_label("X")).phase_power() == 0);
  // X * Y = i Z
  PauliString xy = PauliString::from_label("X") * PauliString::from_label("Y");
  CHECK(xy.phase_power() == 1);
  CHECK(xy.pauli_at(0) == 3);
}

TEST_CASE("multi-qubit products match dense Kronecker products") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t n = 1 + trial % 4;
    PauliString a = random_string(rng, n, true);
    PauliString b = random_string(rng, n, true);
    CHECK(dense_equal(oracle::pauli_dense(a * b),
                      oracle::pauli_dense(a) * oracle::pauli_dense(b)));
  }
  // (Z x X) * (X x X) has unit-magnitude phase and a Y on the first qubit.
  PauliString zx = PauliString::from_label("ZX");
  PauliString xx = PauliString::from_label("XX");
  PauliString prod = zx * xx;
  CHECK(prod.pauli_at(0) == 2);
  CHECK(prod.pauli_at(1) == 0);
  CHECK(dense_equal(oracle::pauli_dense(prod),
                    oracle::pauli_dense(zx) * oracle::pauli_dense(xx)));
}

TEST_CASE("multiplication is associative and identity is neutral") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t n = 1 + trial % 5;
    PauliString a = random_string(rng, n, true);
    PauliString b = random_string(rng, n, true);
    PauliString c = random_string(rng, n, true);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * PauliString::identity(n) == a);
    PauliString self = a;
    self.multiply_phase_by_i((4 - a.phase_power()) & 3);  // strip phase
    PauliString sq = self * self;
    CHECK(sq.is_identity());
    CHECK(sq.has_real_phase());
  }
}

TEST_CASE("commutation matches the symplectic parity rule") {
  CHECK(commutes(PauliString::from_label("ZX"), PauliString::from_label("XZ")));
  CHECK_FALSE(commutes(PauliString::from_label("X"), PauliString::from_label("Y")));
  CHECK(commutes(PauliString::from_label("ZZ"), PauliString::from_label("YY")));
  CHECK(commutes(PauliString::from_label("ZY"), PauliString::from_label("YZ")));
  CHECK(commutes(PauliString::from_label("ZX"), PauliString::from_label("YZ")));
  CHECK(commutes(PauliString::from_label("ZZ"), PauliString::from_label("XX")));
  CHECK_THROWS_AS(commutes(PauliString::from_label("X"), PauliString::from_label("XX")),
                  std::invalid_argument);

  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t n = 1 + trial % 4;
    PauliString a = random_string(rng, n, false);
    PauliString b = random_string(rng, n, false);
    oracle::Matrix da = oracle::pauli_dense(a), db = oracle::pauli_dense(b);
    const bool dense_commutes = dense_equal(da * db, db * da);
    CHECK(commutes(a, b) == dense_commutes);
    CHECK(commutes(a, b) == commutes(b, a));
  }
}

TEST_CASE("commutator norms") {
  auto term = [](std::int64_t num, std::int64_t den, Monomial m, const char* label) {
    return HamTerm(Coefficient(Rational(num, den), m), PauliString::from_label(label));
  };
  const Monomial t{1, 0, 0}, u{0, 1, 0};

  SUBCASE("a term commutes with itself") {
    HamTerm a = term(1, 2, t, "XZ");
    CHECK(commutator_norm(a, a).is_zero());
  }
  SUBCASE("anticommuting pair gives twice the coefficient product") {
    HamTerm a = term(1, 2, t, "X");
    HamTerm b = term(1, 4, u, "Z");
    Coefficient norm = commutator_norm(a, b);
    REQUIRE(norm.terms().size() == 1);
    CHECK(norm.terms().begin()->first == Monomial{1, 1, 0});
    CHECK(norm.terms().begin()->second == Rational(1, 4));
    // ||[X, Z]|| = 2 against the dense matrices.
    oracle::Matrix x = oracle::pauli_dense(PauliString::from_label("X"));
    oracle::Matrix z = oracle::pauli_dense(PauliString::from_label("Z"));
    oracle::Matrix comm = x * z - z * x;
    Eigen::JacobiSVD<oracle::Matrix> svd(comm);
    CHECK(svd.singularValues()(0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(commutator_norm(b, a) == norm);
  }
  SUBCASE("disjoint support commutes") {
    HamTerm a = term(1, 2, t, "XXI");
    HamTerm b = term(1, 4, u, "IIZ");
    CHECK(commutator_norm(a, b).is_zero());
  }
  SUBCASE("negative coefficients enter through their absolute value") {
    HamTerm a = term(-1, 8, t, "X");
    HamTerm b = term(1, 16, Monomial{0, 0, 1}, "Y");
    Coefficient norm = commutator_norm(a, b);
    CHECK(norm == Coefficient(Rational(1, 64), Monomial{1, 0, 1}));
  }
}

TEST_CASE("commutator norm agrees with dense spectral norms up to 4 qubits") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 4);
  for (int trial = 0; trial < 120; ++trial) {
    const std::uint32_t n = 1 + trial % 4;
    Rational ca(num(rng) == 0 ? 1 : num(rng), den(rng));
    Rational cb(num(rng) == 0 ? 1 : num(rng), den(rng));
    PauliString pa = random_string(rng, n, false);
    PauliString pb = random_string(rng, n, false);
    HamTerm a{Coefficient(ca), pa}, b{Coefficient(cb), pb};
    oracle::Matrix da = ca.to_double() * oracle::pauli_dense(pa);
    oracle::Matrix db = cb.to_double() * oracle::pauli_dense(pb);
    Eigen::JacobiSVD<oracle::Matrix> svd(da * db - db * da);
    const double dense_norm = svd.singularValues()(0);
    const double symbolic = commutator_norm(a, b).eval(1, 1, 1);
    CHECK(symbolic == doctest::Approx(dense_norm).epsilon(1e-12));
  }
}

TEST_CASE("ham terms canonicalize real phases into the coefficient") {
  HamTerm minus(Coefficient::one(), PauliString::from_label("-Z"));
  CHECK(minus.pauli.phase_power() == 0);
  CHECK(minus.coeff == Coefficient(Rational(-1)));
  CHECK(minus.is_hermitian());

  HamTerm imag(Coefficient::one(), PauliString::from_label("+iZ"));
  CHECK(imag.pauli.phase_power() == 1);
  CHECK_FALSE(imag.is_hermitian());

  HamTerm minus_imag(Coefficient::one(), PauliString::from_label("-iZ"));
  CHECK(minus_imag.pauli.phase_power() == 1);
  CHECK(minus_imag.coeff == Coefficient(Rational(-1)));
}

TEST_CASE("unit-phase strings have spectral norm one") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint32_t n = 1 + trial % 6;
    PauliString p = random_string(rng, n, false);
    Eigen::JacobiSVD<oracle::Matrix> svd(oracle::pauli_dense(p));
    CHECK(svd.singularValues()(0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(svd.singularValues()(svd.singularValues().size() - 1) ==
          doctest::Approx(1.0).epsilon(1e-13));
  }
}
