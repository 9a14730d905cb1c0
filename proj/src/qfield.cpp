#include "spweb/qfield.hpp"

#include <cctype>
#include <sstream>

namespace spweb {

LaurentPoly::LaurentPoly(const mpz_class& constant) {
  if (constant != 0) coeffs_[0] = constant;
}

LaurentPoly LaurentPoly::term(const mpz_class& c, int e) {
  LaurentPoly p;
  if (c != 0) p.coeffs_[e] = c;
  return p;
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
         coeffs_.begin()->second == 1;
}

int LaurentPoly::min_exp() const {
  if (is_zero()) throw InternalDefect("min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (is_zero()) throw InternalDefect("max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

const mpz_class& LaurentPoly::leading_coeff() const {
  if (is_zero()) throw InternalDefect("leading_coeff of zero polynomial");
  return coeffs_.rbegin()->second;
}

void LaurentPoly::set_coeff(int e, const mpz_class& c) {
  if (c == 0)
    coeffs_.erase(e);
  else
    coeffs_[e] = c;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) {
    auto it = r.coeffs_.find(e);
    if (it == r.coeffs_.end()) {
      r.coeffs_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) r.coeffs_.erase(it);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) {
      auto it = r.coeffs_.find(e1 + e2);
      if (it == r.coeffs_.end()) {
        mpz_class p = c1 * c2;
        if (p != 0) r.coeffs_[e1 + e2] = p;
      } else {
        it->second += c1 * c2;
        if (it->second == 0) r.coeffs_.erase(it);
      }
    }
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, co] : coeffs_) r.coeffs_[e] = co * c;
  return r;
}

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::divided_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw InternalDefect("division by zero polynomial");
  if (is_zero()) return LaurentPoly();
  LaurentPoly rem = *this, quot;
  while (!rem.is_zero()) {
    int e = rem.max_exp() - d.max_exp();
    mpz_class c = rem.leading_coeff() / d.leading_coeff();
    if (c * d.leading_coeff() != rem.leading_coeff())
      throw InternalDefect("inexact polynomial division");
    LaurentPoly t = LaurentPoly::term(c, e);
    quot = quot + t;
    rem = rem - t * d;
    if (!rem.is_zero() && rem.max_exp() >= max_exp() + 1)
      throw InternalDefect("polynomial division diverged");
  }
  return quot;
}

mpq_class LaurentPoly::eval(const mpq_class& t) const {
  if (t == 0) throw InvalidArgument("zero evaluation point");
  mpq_class acc = 0;
  for (const auto& [e, c] : coeffs_) {
    mpq_class p = 1;
    mpq_class base = e >= 0 ? t : mpq_class(t.get_den(), t.get_num());
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) p *= base;
    p.canonicalize();
    acc += c * p;
  }
  acc.canonicalize();
  return acc;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str();
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

// Pseudo-remainder of a by b (both nonzero, min exponent 0 in q).
LaurentPoly prem(LaurentPoly a, const LaurentPoly& b) {
  int db = b.max_exp();
  const mpz_class& lb = b.leading_coeff();
  while (!a.is_zero() && a.max_exp() >= db) {
    int sh = a.max_exp() - db;
    mpz_class la = a.leading_coeff();
    a = a.scaled(lb) - b.scaled(la).shifted(sh);
  }
  return a;
}

LaurentPoly primitive_part(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly q = p.shifted(-p.min_exp());
  mpz_class c = q.content();
  if (q.leading_coeff() < 0) c = -c;
  LaurentPoly r;
  for (const auto& [e, co] : q.terms()) r.set_coeff(e, mpz_class(co / c));
  return r;
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  LaurentPoly x = primitive_part(a), y = primitive_part(b);
  if (x.max_exp() < y.max_exp()) std::swap(x, y);
  while (!y.is_zero()) {
    LaurentPoly r = primitive_part(prem(x, y));
    x = y;
    y = r;
  }
  return x;
}

QScalar::QScalar(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InvalidArgument("division by zero scalar");
  normalize();
}

QScalar QScalar::q_power(int e) {
  QScalar r;
  r.num_ = LaurentPoly::term(1, e);
  r.den_ = LaurentPoly(1);
  return r;
}

void QScalar::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // Shift both into Z[q] with nonzero constant term; track the net q-power.
  int kn = num_.min_exp(), kd = den_.min_exp();
  LaurentPoly n0 = num_.shifted(-kn), d0 = den_.shifted(-kd);
  // Remove the polynomial gcd, then the integer content gcd.
  LaurentPoly g = laurent_gcd(n0, d0);
  if (!g.is_one()) {
    n0 = n0.divided_exact(g);
    d0 = d0.divided_exact(g);
  }
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), n0.content().get_mpz_t(), d0.content().get_mpz_t());
  if (d0.leading_coeff() < 0) cg = -cg;
  if (cg != 1) {
    LaurentPoly n1, d1;
    for (const auto& [e, c] : n0.terms()) n1.set_coeff(e, mpz_class(c / cg));
    for (const auto& [e, c] : d0.terms()) d1.set_coeff(e, mpz_class(c / cg));
    n0 = n1;
    d0 = d1;
  }
  num_ = n0.shifted(kn - kd);
  den_ = d0;
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

QScalar QScalar::operator+(const QScalar& o) const {
  return QScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator-(const QScalar& o) const {
  return QScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator*(const QScalar& o) const {
  return QScalar(num_ * o.num_, den_ * o.den_);
}

QScalar QScalar::operator/(const QScalar& o) const { return *this * o.inv(); }

QScalar QScalar::inv() const {
  if (is_zero()) throw InvalidArgument("division by zero scalar");
  return QScalar(den_, num_);
}

QScalar QScalar::bar() const {
  LaurentPoly n, d;
  for (const auto& [e, c] : num_.terms()) n.set_coeff(-e, c);
  for (const auto& [e, c] : den_.terms()) d.set_coeff(-e, c);
  return QScalar(n, d);
}

bool QScalar::operator<(const QScalar& o) const {
  if (num_ != o.num_) return num_ < o.num_;
  return den_ < o.den_;
}

mpq_class QScalar::eval_at(const mpq_class& t) const {
  if (t == 0) throw InvalidArgument("zero evaluation point");
  mpq_class d = den_.eval(t);
  if (d == 0) throw InvalidArgument("pole at evaluation point");
  mpq_class r = num_.eval(t) / d;
  r.canonicalize();
  return r;
}

std::string QScalar::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

QScalar qint(int n) {
  if (n < 1) throw InvalidArgument("qint requires n >= 1");
  LaurentPoly p;
  for (int e = 1 - n; e <= n - 1; e += 2) p.set_coeff(e, 1);
  return QScalar(p);
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(const std::string& s) : s_(s) {}

  QScalar run() {
    QScalar r = sum();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("scalar parse error at position " +
                          std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long integer() {
    bool neg = false;
    if (peek() == '-') { neg = true; ++pos_; }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return neg ? -v : v;
  }

  bool at_factor() {
    skip();
    char c = peek();
    return c == 'q' || c == '[' || c == '(' ||
           std::isdigit(static_cast<unsigned char>(c));
  }

  QScalar factor() {
    skip();
    QScalar base;
    char c = peek();
    if (c == '(') {
      ++pos_;
      base = sum();
      skip();
      expect(')');
    } else if (c == '[') {
      ++pos_;
      skip();
      long n = integer();
      skip();
      expect(']');
      base = qint(static_cast<int>(n));
    } else if (c == 'q') {
      ++pos_;
      long e = 1;
      if (peek() == '^') { ++pos_; e = integer(); }
      base = QScalar::q_power(static_cast<int>(e));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      base = QScalar(integer());
    } else {
      fail("expected a factor");
    }
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      long e = integer();
      QScalar b = e < 0 ? base.inv() : base;
      QScalar r(1);
      for (long k = 0; k < (e < 0 ? -e : e); ++k) r = r * b;
      base = r;
    }
    return base;
  }

  QScalar term() {
    QScalar r = factor();
    for (;;) {
      skip();
      if (peek() == '*') {
        ++pos_;
        r = r * factor();
      } else if (peek() == '/') {
        ++pos_;
        r = r / factor();
      } else if (at_factor()) {
        r = r * factor();
      } else {
        return r;
      }
    }
  }

  QScalar sum() {
    skip();
    int sign = 1;
    if (peek() == '-') { sign = -1; ++pos_; }
    else if (peek() == '+') ++pos_;
    QScalar r = term();
    if (sign < 0) r = -r;
    for (;;) {
      skip();
      if (peek() == '+') {
        ++pos_;
        r = r + term();
      } else if (peek() == '-') {
        ++pos_;
        r = r - term();
      } else {
        return r;
      }
    }
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

QScalar parse_scalar(const std::string& text) { return ScalarParser(text).run(); }

}  // namespace spweb
