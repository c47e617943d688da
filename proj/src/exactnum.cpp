#include "pbasic/exactnum.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace pbasic {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0 || text.empty() || q.get_den() == 0)
    throw std::invalid_argument("bad rational: '" + text + "'");
  q.canonicalize();
  return q;
}

namespace {

// Exact division of integer polynomials (num / den, den monic up to sign).
std::vector<Integer> poly_divide(std::vector<Integer> num,
                                 const std::vector<Integer>& den) {
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  std::vector<Integer> quo(dn - dd + 1, 0);
  for (int k = dn - dd; k >= 0; --k) {
    Integer c = num[k + dd] / den[dd];
    quo[k] = c;
    for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
  }
  for (const Integer& r : num)
    if (r != 0) throw std::logic_error("non-exact polynomial division");
  return quo;
}

struct OrderData {
  int m = 1;
  int deg = 1;
  std::vector<Integer> phi;                 // cyclotomic polynomial, monic
  std::vector<std::vector<Rational>> pow;   // pow[k] = x^k mod phi, k in [0, m)
};

std::map<int, OrderData> g_orders;
std::mutex g_orders_mutex;

std::vector<Integer> compute_phi(int m);

const std::vector<Integer>& phi_locked(int m) {
  auto it = g_orders.find(m);
  if (it != g_orders.end() && !it->second.phi.empty()) return it->second.phi;
  std::vector<Integer> phi = compute_phi(m);
  auto& slot = g_orders[m];
  slot.m = m;
  slot.phi = std::move(phi);
  slot.deg = static_cast<int>(slot.phi.size()) - 1;
  return slot.phi;
}

std::vector<Integer> compute_phi(int m) {
  // x^m - 1 divided by the product of the proper cyclotomic divisors.
  std::vector<Integer> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    num = poly_divide(std::move(num), phi_locked(d));
  }
  return num;
}

// Reduce a coefficient vector (any length) modulo phi_m in place, to deg
// coefficients.
void reduce_mod_phi(std::vector<Rational>& c, const OrderData& od) {
  for (int k = static_cast<int>(c.size()) - 1; k >= od.deg; --k) {
    if (c[k] == 0) continue;
    Rational lead = c[k];
    c[k] = 0;
    for (int j = 0; j < od.deg; ++j)
      c[k - od.deg + j] -= lead * Rational(od.phi[j]);
  }
  c.resize(od.deg);
}

const OrderData& order_data(int m) {
  std::lock_guard<std::mutex> lock(g_orders_mutex);
  auto& slot = g_orders[m];
  if (!slot.pow.empty()) return slot;
  slot.m = m;
  slot.phi = phi_locked(m);
  slot.deg = static_cast<int>(slot.phi.size()) - 1;
  slot.pow.resize(m);
  std::vector<Rational> cur(1, Rational(1));
  for (int k = 0; k < m; ++k) {
    std::vector<Rational> padded = cur;
    padded.resize(std::max<size_t>(padded.size(), slot.deg), Rational(0));
    reduce_mod_phi(padded, slot);
    slot.pow[k] = padded;
    // multiply by x
    cur.insert(cur.begin(), Rational(0));
    reduce_mod_phi(cur, slot);
  }
  return slot;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
  return order_data(m).phi;
}

Cyclotomic::Cyclotomic(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  c_.assign(order_data(order).deg, Rational(0));
}

Cyclotomic::Cyclotomic(int order, const Rational& constant) : Cyclotomic(order) {
  c_[0] = constant;
}

Cyclotomic Cyclotomic::root(int order, long power) {
  Cyclotomic z(order);
  long k = power % order;
  if (k < 0) k += order;
  z.c_ = order_data(order).pow[k];
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_part() const {
  if (!is_rational()) throw std::logic_error("cyclotomic value is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::conj() const {
  const OrderData& od = order_data(order_);
  Cyclotomic out(order_);
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    long k = (order_ - static_cast<long>(j)) % order_;
    const auto& rep = od.pow[k];
    for (int i = 0; i < od.deg; ++i) out.c_[i] += c_[j] * rep[i];
  }
  return out;
}

void Cyclotomic::check_order(const Cyclotomic& o) const {
  if (order_ != o.order_)
    throw std::invalid_argument("mismatched cyclotomic orders");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_order(o);
  for (size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check_order(o);
  for (size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  check_order(o);
  const OrderData& od = order_data(order_);
  std::vector<Rational> conv(2 * od.deg, Rational(0));
  for (int i = 0; i < od.deg; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < od.deg; ++j) {
      if (o.c_[j] == 0) continue;
      conv[i + j] += c_[i] * o.c_[j];
    }
  }
  reduce_mod_phi(conv, od);
  c_ = std::move(conv);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& s) {
  if (s == 0) throw std::invalid_argument("division by zero");
  for (auto& x : c_) x /= s;
  return *this;
}

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int j = static_cast<int>(c_.size()) - 1; j >= 0; --j) {
    if (c_[j] == 0) continue;
    Rational coef = c_[j];
    bool neg = coef < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Rational abscoef = neg ? Rational(-coef) : coef;
    std::string term;
    if (j == 0) {
      term = to_string(abscoef);
    } else {
      if (abscoef != 1) term = to_string(abscoef) + "*";
      term += "zeta" + std::to_string(order_) + "^" + std::to_string(j);
    }
    out += term;
  }
  return out;
}

long squarefree_part(long d, long& s) {
  if (d == 0) throw std::invalid_argument("radicand must be non-zero");
  long sign = d < 0 ? -1 : 1;
  long v = d < 0 ? -d : d;
  s = 1;
  for (long f = 2; f * f <= v; ++f) {
    while (v % (f * f) == 0) {
      v /= f * f;
      s *= f;
    }
  }
  return sign * v;
}

QuadValue::QuadValue(const Rational& a, const Rational& b, long d)
    : a_(a), b_(b), d_(d) {
  if (b_ == 0) {
    d_ = 1;
    return;
  }
  long s = 1;
  d_ = squarefree_part(d, s);
  b_ *= Rational(s);
  if (d_ == 1) {  // sqrt(1) collapses into the rational part
    a_ += b_;
    b_ = 0;
  }
}

Rational QuadValue::rational_part() const {
  if (!is_rational()) throw std::logic_error("quadratic value is not rational");
  return a_;
}

QuadValue QuadValue::conj() const {
  QuadValue out = *this;
  if (d_ < 0) out.b_ = -out.b_;
  return out;
}

std::string QuadValue::str() const {
  if (is_rational()) return to_string(a_);
  std::string out;
  if (a_ != 0) out = to_string(a_);
  if (b_ < 0)
    out += out.empty() ? "-" : "-";
  else if (!out.empty())
    out += "+";
  Rational absb = b_ < 0 ? Rational(-b_) : b_;
  if (absb != 1) out += to_string(absb) + "*";
  out += "sqrt(" + std::to_string(d_) + ")";
  return out;
}

QuadValue& QuadValue::operator+=(const QuadValue& o) {
  if (b_ != 0 && o.b_ != 0 && d_ != o.d_)
    throw std::invalid_argument("mismatched radicands in quadratic sum");
  a_ += o.a_;
  if (o.b_ != 0) {
    d_ = o.d_;
    b_ += o.b_;
    if (b_ == 0) d_ = 1;
  } else if (b_ == 0) {
    d_ = 1;
  }
  return *this;
}

QuadValue& QuadValue::operator-=(const QuadValue& o) { return *this += -QuadValue(o); }

QuadValue& QuadValue::operator*=(const QuadValue& o) {
  if (b_ != 0 && o.b_ != 0 && d_ != o.d_)
    throw std::invalid_argument("mismatched radicands in quadratic product");
  long d = b_ != 0 ? d_ : o.d_;
  Rational na = a_ * o.a_ + b_ * o.b_ * Rational(d);
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = na;
  b_ = nb;
  d_ = nb == 0 ? 1 : d;
  return *this;
}

}  // namespace pbasic
