#include "doctest.h"

#include "gen.hpp"
#include "oracle.hpp"
#include "qfrob/linalg.hpp"
#include "qfrob/qcomb.hpp"

using namespace qfrob;

namespace {

LaurentPoly v(int k) { return LaurentPoly::v_pow(k); }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(QPoly::cyclotomic(1) == QPoly({Rational(-1), Rational(1)}));
  CHECK(QPoly::cyclotomic(8) == QPoly({Rational(1), 0, 0, 0, Rational(1)}));
  CHECK(QPoly::cyclotomic(12) == QPoly({Rational(1), 0, Rational(-1), 0, Rational(1)}));
  CHECK(QPoly::cyclotomic(9).degree() == 6);
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("cyclotomic field identities") {
  for (int n : {4, 6, 8, 12, 16}) {
    CycloElem z = CycloElem::zeta_power(n, 1);
    CycloElem p = 1;
    for (int k = 0; k < n; ++k) p *= z;
    CHECK(p == CycloElem(1));
    CHECK(CycloElem::zeta_power(n, n / 2) == CycloElem(-1));
    CHECK(z * CycloElem::zeta_power(n, -1) == CycloElem(1));
  }
  CHECK(CycloElem() + CycloElem::zeta_power(8, 1) == CycloElem::zeta_power(8, 1));
  CHECK(CycloElem(0) == CycloElem::zeta_power(8, 0) - CycloElem(1));
}

TEST_CASE("cyclotomic ring axioms on random triples") {
  testgen::Gen g(11);
  for (int n : {8, 12}) {
    for (int trial = 0; trial < 40; ++trial) {
      CycloElem a = g.cyclo(n), b = g.cyclo(n), c = g.cyclo(n);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      if (!a.is_zero()) CHECK(a * a.inverse() == CycloElem(1));
      auto za = oracle::to_complex(a, n), zb = oracle::to_complex(b, n);
      CHECK(oracle::close(oracle::to_complex(a * b, n), za * zb));
    }
  }
}

TEST_CASE("qint examples") {
  CHECK(qint(0, 1).is_zero());
  CHECK(qint(3, 1) == v(2) + LaurentPoly(1) + v(-2));
  CHECK(qint(1, 2) == LaurentPoly(1));
  CHECK(qint(2, 2) == v(2) + v(-2));
  // l = 4: z^4 = -1 kills the numerator.
  CHECK(qint(4, 1).eval(8).is_zero());
  for (long m = -12; m <= 12; ++m)
    for (int d = 1; d <= 3; ++d) CHECK(qint(-m, d) == -qint(m, d));
}

TEST_CASE("qfact examples") {
  CHECK(qfact(0, 1) == LaurentPoly(1));
  CHECK(qfact(2, 1) == v(1) + v(-1));
  CHECK(qfact(4, 1).eval(8).is_zero());
  CHECK(!qfact(3, 1).eval(8).is_zero());
  CHECK_THROWS(qfact(-1, 1));
}

TEST_CASE("qbinom examples against the direct numeric product") {
  CHECK(qbinom(7, 0, 2) == LaurentPoly(1));
  CHECK(qbinom(2, 1, 1) == v(1) + v(-1));
  const auto z8 = oracle::root_of_unity(8, 1);
  for (long t = 1; t <= 3; ++t) {
    CHECK(qbinom(4, t, 1).eval(8).is_zero());
    CHECK(std::abs(oracle::qbinom_at(4, t, 1, z8)) < 1e-12);
  }
  const auto v0 = std::complex<double>(1.3, 0.4);
  for (long m = -20; m <= 20; m += 3)
    for (long t = 0; t <= 10; t += 2)
      for (int d = 1; d <= 3; ++d)
        CHECK(oracle::close(oracle::eval(qbinom(m, t, d), v0), oracle::qbinom_at(m, t, d, v0), 1e-7));
}

TEST_CASE("Pascal identity on the full grid") {
  for (int d = 1; d <= 3; ++d)
    for (long m = -20; m <= 20; ++m)
      for (long t = 1; t <= 10; ++t) {
        LaurentPoly rhs = v(static_cast<int>(d * t)) * qbinom(m - 1, t, d) +
                          v(static_cast<int>(-d * (m - t))) * qbinom(m - 1, t - 1, d);
        CHECK(qbinom(m, t, d) == rhs);
      }
}

TEST_CASE("local_eval") {
  CHECK(local_eval(LocalScalar(1), 8) == CycloElem(1));
  CHECK(local_eval(LocalScalar(v(1)), 8) == CycloElem::zeta_power(8, 1));
  LocalScalar x(qint(3, 1), qint(1, 1));
  CycloElem expect = CycloElem::zeta_power(8, 2) + CycloElem(1) + CycloElem::zeta_power(8, -2);
  CHECK(local_eval(x, 8) == expect);
  // z^2 + z^-2 = 0 in Q(zeta_8).
  CHECK(expect == CycloElem(1));
  LocalScalar bad(LaurentPoly(1), qint(4, 1));
  CHECK_THROWS_AS(local_eval(bad, 8), std::domain_error);
}

TEST_CASE("local scalar arithmetic and cancellation") {
  LocalScalar a(qfact(4, 1), qfact(4, 1));
  CHECK(a.is_laurent());
  CHECK(a == LocalScalar(1));
  LocalScalar b(qint(4, 1) * qint(5, 1), qint(4, 1) * qint(3, 1));
  CHECK(b.regular_at(8));
  CHECK(b * LocalScalar(qint(3, 1)) == LocalScalar(qint(5, 1)));

  testgen::Gen g(7);
  for (int trial = 0; trial < 40; ++trial) {
    LocalScalar x = g.local(8), y = g.local(8), z = g.local(8);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) CHECK(x * (LocalScalar(1) / x) == LocalScalar(1));
    CHECK(local_eval(x * y, 8) == local_eval(x, 8) * local_eval(y, 8));
    CHECK(local_eval(x + y, 8) == local_eval(x, 8) + local_eval(y, 8));
  }
}

TEST_CASE("matrix_divide_exact") {
  Matrix<LaurentPoly> zero(3, 3);
  CHECK(matrix_divide_exact(zero, qfact(4, 1), 8).is_zero_matrix());
  Matrix<LaurentPoly> m = Matrix<LaurentPoly>::diagonal({qint(2, 1), qint(2, 1)});
  CHECK(matrix_divide_exact(m, qint(2, 1), 8) == Matrix<LocalScalar>::identity(2));
  Matrix<LaurentPoly> bad = Matrix<LaurentPoly>::identity(1);
  CHECK_THROWS_AS(matrix_divide_exact(bad, qfact(4, 1), 8), std::domain_error);
}

TEST_CASE("QParams validation") {
  auto p = QParams::make(6, {1, 3});
  CHECK(p.ell_i == std::vector<int>{6, 2});
  CHECK(p.n == 12);
  CHECK_THROWS(QParams::make(5, {1}));
  CHECK_THROWS(QParams::make(4, {3}));
  CHECK_THROWS(QParams::make(2, {2}));
  // qint(l_i, d_i) vanishes at zeta.
  for (int ell : {4, 6}) {
    auto q = QParams::make(ell, {1, 2});
    for (std::size_t i = 0; i < 2; ++i) CHECK(q.eval(qint(q.ell_i[i], q.d[i])).is_zero());
  }
}

TEST_CASE("exact linear algebra over Q(zeta)") {
  Matrix<CycloElem> m(3, 3);
  CycloElem z = CycloElem::zeta_power(8, 1);
  m.set(0, 0, 1);
  m.set(0, 1, z);
  m.set(1, 0, z);
  m.set(1, 1, z * z);
  m.set(2, 2, 2);
  CHECK(rank(m) == 2);
  Matrix<CycloElem> k = nullspace(m);
  CHECK(k.cols() == 1);
  CHECK((m * k).is_zero_matrix());
  m.set(1, 1, 3);
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m * *inv == Matrix<CycloElem>::identity(3));
}
