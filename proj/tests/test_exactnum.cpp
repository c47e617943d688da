#include <doctest.h>

#include <stdexcept>

#include "pbasic/exactnum.hpp"

using namespace pbasic;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));  // canonicalized
  CHECK(parse_rational("5") == Rational(5));
  CHECK(to_string(Rational(3, 4)) == "3/4");
  CHECK(to_string(parse_rational("8/4")) == "2");  // canonicalized on parse
  CHECK(to_string(Integer(-12)) == "-12");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomial coefficients") {
  auto coeffs = [](int m) {
    std::vector<long> out;
    for (const Integer& c : cyclotomic_polynomial(m)) out.push_back(c.get_si());
    return out;
  };
  CHECK(coeffs(1) == std::vector<long>{-1, 1});            // x - 1
  CHECK(coeffs(2) == std::vector<long>{1, 1});             // x + 1
  CHECK(coeffs(3) == std::vector<long>{1, 1, 1});          // x^2 + x + 1
  CHECK(coeffs(4) == std::vector<long>{1, 0, 1});          // x^2 + 1
  CHECK(coeffs(6) == std::vector<long>{1, -1, 1});         // x^2 - x + 1
  CHECK(coeffs(12) == std::vector<long>{1, 0, -1, 0, 1});  // x^4 - x^2 + 1
}

TEST_CASE("cyclotomic arithmetic in Q(zeta_m)") {
  // zeta_4^2 = -1
  Cyclotomic i = Cyclotomic::root(4, 1);
  CHECK(i * i == Cyclotomic(4, Rational(-1)));
  CHECK((i * i * i * i) == Cyclotomic(4, Rational(1)));

  // sum of all m-th roots of unity vanishes (m = 6: phi(6) = 2 basis)
  Cyclotomic sum(6);
  for (int j = 0; j < 6; ++j) sum += Cyclotomic::root(6, j);
  CHECK(sum.is_zero());

  // power wraps: zeta_6^7 = zeta_6, zeta_6^-1 = zeta_6^5
  CHECK(Cyclotomic::root(6, 7) == Cyclotomic::root(6, 1));
  CHECK(Cyclotomic::root(6, -1) == Cyclotomic::root(6, 5));

  // conjugation inverts the root: zeta * conj(zeta) = 1
  for (int m : {3, 4, 5, 6, 12}) {
    Cyclotomic z = Cyclotomic::root(m, 1);
    CHECK(z * z.conj() == Cyclotomic(m, Rational(1)));
  }

  // reduction is canonical: 1 + zeta_3 + zeta_3^2 == 0 coefficientwise
  Cyclotomic z3 = Cyclotomic::root(3, 1);
  Cyclotomic expr = Cyclotomic(3, Rational(1)) + z3 + z3 * z3;
  CHECK(expr.is_zero());
  CHECK(expr == Cyclotomic(3));

  // rational detection
  Cyclotomic r = Cyclotomic(5, Rational(7, 2));
  CHECK(r.is_rational());
  CHECK(r.rational_part() == Rational(7, 2));
  CHECK_FALSE(Cyclotomic::root(5, 1).is_rational());

  // mixed orders are a programming error
  CHECK_THROWS_AS(Cyclotomic::root(3, 1) + Cyclotomic::root(4, 1),
                  std::invalid_argument);
}

TEST_CASE("quadratic values normalize their radicand") {
  // golden-ratio pair: ((1 + sqrt 5)/2) * ((1 - sqrt 5)/2) = -1
  QuadValue plus(Rational(1, 2), Rational(1, 2), 5);
  QuadValue minus(Rational(1, 2), Rational(-1, 2), 5);
  CHECK(plus * minus == QuadValue(Rational(-1)));
  CHECK(plus + minus == QuadValue(Rational(1)));

  // square factors migrate into b: sqrt(12) = 2*sqrt(3)
  QuadValue v(Rational(0), Rational(1), 12);
  CHECK(v.d() == 3);
  CHECK(v.b() == Rational(2));

  // perfect-square radicand collapses to a rational
  QuadValue w(Rational(1), Rational(1), 9);  // 1 + sqrt(9) = 4
  CHECK(w.is_rational());
  CHECK(w.rational_part() == Rational(4));
  CHECK(w.d() == 1);

  // negative radicands: sqrt(-4) = 2*sqrt(-1)
  QuadValue im(Rational(0), Rational(1), -4);
  CHECK(im.d() == -1);
  CHECK(im.b() == Rational(2));
  CHECK(im * im == QuadValue(Rational(-4)));

  // complex conjugation negates b only for negative radicands
  CHECK(im.conj() == QuadValue(Rational(0), Rational(-2), -1));
  QuadValue real(Rational(2), Rational(3), 5);
  CHECK(real.conj() == real);

  // b == 0 forces d == 1 so equality is structural
  QuadValue zero_b(Rational(3), Rational(0), 7);
  CHECK(zero_b.d() == 1);
  CHECK(zero_b == QuadValue(Rational(3)));

  // mismatched radicands cannot be added
  CHECK_THROWS_AS(QuadValue(Rational(0), Rational(1), 5) +
                      QuadValue(Rational(0), Rational(1), 7),
                  std::invalid_argument);
}

TEST_CASE("squarefree_part") {
  long s = 0;
  CHECK(squarefree_part(1, s) == 1);
  CHECK(s == 1);
  CHECK(squarefree_part(12, s) == 3);
  CHECK(s == 2);
  CHECK(squarefree_part(9, s) == 1);
  CHECK(s == 3);
  CHECK(squarefree_part(-75, s) == -3);
  CHECK(s == 5);
  CHECK(squarefree_part(30, s) == 30);
  CHECK(s == 1);
}
