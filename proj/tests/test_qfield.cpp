#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spweb/qfield.hpp"

using namespace spweb;

TEST_CASE("quantum integers") {
  CHECK(qint(1).str() == "1");
  CHECK(qint(2).str() == "q^-1 + q");
  CHECK(qint(3).str() == "q^-2 + 1 + q^2");
  CHECK_THROWS_AS(qint(0), InvalidArgument);
  CHECK_THROWS_AS(qint(-3), InvalidArgument);

  // [3][8]/[4] = q^-6+q^-4+q^-2+q^2+q^4+q^6 (the negative of the 1-circle).
  QScalar v = qint(3) * qint(8) / qint(4);
  CHECK(v.str() == "q^-6 + q^-4 + q^-2 + q^2 + q^4 + q^6");
  CHECK((-v).str() == "-q^-6 - q^-4 - q^-2 - q^2 - q^4 - q^6");

  // [n](q - q^-1) = q^n - q^-n for 1 <= n <= 20.
  QScalar qmqi = QScalar::q_power(1) - QScalar::q_power(-1);
  for (int n = 1; n <= 20; ++n) {
    QScalar rhs = QScalar::q_power(n) - QScalar::q_power(-n);
    CHECK(qint(n) * qmqi == rhs);
  }
}

TEST_CASE("canonical form and field ops") {
  QScalar two = qint(2);
  CHECK(two + (-two) == QScalar(0));
  CHECK(two.inv() * two == QScalar(1));
  CHECK_THROWS_AS(QScalar(0).inv(), InvalidArgument);

  // [7] - 1 (used as -(1-circle) in the BMW loop value) equals [3][8]/[4].
  QScalar v = qint(7) - QScalar(1);
  CHECK(v.str() == "q^-6 + q^-4 + q^-2 + q^2 + q^4 + q^6");
  CHECK(v == qint(3) * qint(8) / qint(4));

  // Reduction across numerator/denominator, including sign and content.
  QScalar a(LaurentPoly::term(2, 3) * LaurentPoly(3),
            LaurentPoly(-2) * (LaurentPoly::term(1, 1) + LaurentPoly(1)));
  QScalar b(LaurentPoly::term(-3, 3),
            LaurentPoly::term(1, 1) + LaurentPoly(1));
  CHECK(a == b);

  // Canonicalization idempotence.
  QScalar c(a.num(), a.den());
  CHECK(c == a);
}

TEST_CASE("eval_at") {
  CHECK(qint(2).eval_at(1) == mpq_class(2));
  CHECK(qint(3).eval_at(2) == mpq_class(21, 4));
  // 1/(q-1) has a pole at q = 1.
  QScalar pole(LaurentPoly(1),
               LaurentPoly::term(1, 1) - LaurentPoly(1));
  CHECK_THROWS_AS(pole.eval_at(1), InvalidArgument);
  CHECK_THROWS_AS(qint(2).eval_at(0), InvalidArgument);
}

namespace {

QScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), expo(-3, 3), len(1, 4);
  auto poly = [&] {
    LaurentPoly p;
    int n = len(rng);
    for (int i = 0; i < n; ++i) p.set_coeff(expo(rng), coef(rng));
    return p;
  };
  LaurentPoly num = poly(), den;
  while (den.is_zero()) den = poly();
  return QScalar(num, den);
}

}  // namespace

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(20260826);
  for (int i = 0; i < 1000; ++i) {
    QScalar a = random_scalar(rng), b = random_scalar(rng),
            c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inv() == QScalar(1));
    CHECK(a + (-a) == QScalar(0));
  }
}

TEST_CASE("eval_at is a ring homomorphism") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(1, 30);
  int done = 0;
  while (done < 200) {
    QScalar a = random_scalar(rng), b = random_scalar(rng);
    mpq_class t(pick(rng), pick(rng));
    try {
      mpq_class ea = a.eval_at(t), eb = b.eval_at(t);
      CHECK((a + b).eval_at(t) == ea + eb);
      CHECK((a * b).eval_at(t) == ea * eb);
      ++done;
    } catch (const InvalidArgument&) {
      // pole at t; resample
    }
  }
}

TEST_CASE("bar involution") {
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    QScalar a = random_scalar(rng), b = random_scalar(rng);
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a + b).bar() == a.bar() + b.bar());
  }
  CHECK(QScalar::q_power(1).bar() == QScalar::q_power(-1));
  CHECK(qint(5).bar() == qint(5));
}
