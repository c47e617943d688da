#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace pbasic {

// GMP-backed exact arithmetic.  mpq_class keeps fractions canonical
// (gcd 1, positive denominator) after every operation.
using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);  // "p/q", plain "p" for integers
Rational parse_rational(const std::string& text);

// Element of Q(zeta_m): rational coefficients on the power basis
// zeta^0..zeta^{phi(m)-1}, reduced modulo the m-th cyclotomic polynomial.
// The representation is canonical, so equality is coefficientwise.
// Arithmetic requires matching orders (rational constants aside).
class Cyclotomic {
public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int order);                  // zero
  Cyclotomic(int order, const Rational& constant);
  static Cyclotomic root(int order, long power);   // zeta_order^power

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_part() const;  // requires is_rational()
  Cyclotomic conj() const;         // zeta -> zeta^{-1}
  std::string str() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& s);
  Cyclotomic& operator/=(const Rational& s);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
  friend Cyclotomic operator-(Cyclotomic a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

private:
  int order_;
  std::vector<Rational> c_;  // size phi(order_)
  void check_order(const Cyclotomic& o) const;
};

// Coefficients of the m-th cyclotomic polynomial (monic, degree phi(m)).
const std::vector<Integer>& cyclotomic_polynomial(int m);

// a + b*sqrt(d) with d a squarefree integer (possibly negative) and d == 1
// exactly when b == 0.  Sums and products are defined when the radicands
// match or one operand is rational.
class QuadValue {
public:
  QuadValue() : d_(1) {}
  QuadValue(const Rational& a) : a_(a), d_(1) {}  // NOLINT: implicit by design
  QuadValue(const Rational& a, const Rational& b, long d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }
  bool is_rational() const { return b_ == 0; }
  Rational rational_part() const;  // requires is_rational()
  QuadValue conj() const;  // complex conjugation: negates b when d < 0
  std::string str() const;

  QuadValue& operator+=(const QuadValue& o);
  QuadValue& operator-=(const QuadValue& o);
  QuadValue& operator*=(const QuadValue& o);
  friend QuadValue operator+(QuadValue a, const QuadValue& b) { return a += b; }
  friend QuadValue operator-(QuadValue a, const QuadValue& b) { return a -= b; }
  friend QuadValue operator*(QuadValue a, const QuadValue& b) { return a *= b; }
  friend QuadValue operator-(QuadValue a) {
    a.a_ = -a.a_;
    a.b_ = -a.b_;
    return a;
  }
  friend bool operator==(const QuadValue& a, const QuadValue& b) {
    return a.a_ == b.a_ && a.b_ == b.b_ && a.d_ == b.d_;
  }

private:
  Rational a_, b_;
  long d_;
};

// Largest square divisor pulled out: d = sf * s^2 with sf squarefree
// (sign preserved on sf).  Returns sf and stores s.
long squarefree_part(long d, long& s);

}  // namespace pbasic
