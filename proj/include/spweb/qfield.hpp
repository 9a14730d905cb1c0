// Exact arithmetic in the rational-function field Q(q).
//
// LaurentPoly is an integer-coefficient Laurent polynomial in a formal
// variable q; QScalar is a reduced fraction of two LaurentPolys kept in a
// unique canonical form so that structural equality coincides with equality
// in the field.  All coefficients are arbitrary-precision (GMP).
#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace spweb {

// Thrown on invalid caller input (bad arguments, parse errors, ...).
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown on internal defects (broken invariants, missing table entries, ...).
struct InternalDefect : std::logic_error {
  using std::logic_error::logic_error;
};

// Integer-coefficient Laurent polynomial: exponent -> nonzero coefficient.
// The zero polynomial is the empty map.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const mpz_class& constant);
  explicit LaurentPoly(long constant) : LaurentPoly(mpz_class(constant)) {}

  // q^e with coefficient c (no-op if c == 0).
  static LaurentPoly term(const mpz_class& c, int e);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero
  const mpz_class& leading_coeff() const;        // coefficient of max_exp
  const std::map<int, mpz_class>& terms() const { return coeffs_; }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  bool operator<(const LaurentPoly& o) const { return coeffs_ < o.coeffs_; }

  LaurentPoly shifted(int k) const;              // multiply by q^k
  LaurentPoly scaled(const mpz_class& c) const;  // multiply by integer c
  mpz_class content() const;                     // gcd of |coefficients|, 0 for 0

  // Exact division; throws InternalDefect if the division is not exact.
  LaurentPoly divided_exact(const LaurentPoly& d) const;

  // Evaluation at a nonzero rational point (exact).
  mpq_class eval(const mpq_class& t) const;

  // Plain-text rendering, terms sorted by ascending exponent,
  // e.g. "-q^-6 - q^-4 - q^-2 - q^2 - q^4 - q^6".
  std::string str() const;

  void set_coeff(int e, const mpz_class& c);

 private:
  std::map<int, mpz_class> coeffs_;
};

// GCD over Z[q] of two Laurent polynomials after clearing minimal q-powers;
// computed with a primitive pseudo-remainder sequence (fraction-free).
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Element of Q(q) as a canonical reduced fraction num/den:
//   * den is in Z[q] (min exponent 0) with nonzero constant term and
//     positive leading coefficient;
//   * gcd(num cleared of its minimal q-power, den) is 1, and the integer
//     contents of num and den are coprime.
// Canonical form is unique, so operator== is field equality.
class QScalar {
 public:
  QScalar() : num_(), den_(1) {}                        // zero
  QScalar(long n) : num_(n), den_(1) { normalize(); }   // integer constant
  QScalar(const mpz_class& n) : num_(n), den_(1) { normalize(); }
  QScalar(LaurentPoly num, LaurentPoly den);
  explicit QScalar(const LaurentPoly& num) : num_(num), den_(1) {}

  static QScalar q_power(int e);  // q^e

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integral() const { return den_.is_one(); }  // in Z[q,q^-1]

  QScalar operator-() const;
  QScalar operator+(const QScalar& o) const;
  QScalar operator-(const QScalar& o) const;
  QScalar operator*(const QScalar& o) const;
  QScalar operator/(const QScalar& o) const;
  QScalar inv() const;  // throws InvalidArgument on zero
  QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
  QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
  QScalar& operator*=(const QScalar& o) { return *this = *this * o; }

  // Bar involution q -> q^-1.
  QScalar bar() const;

  bool operator==(const QScalar& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const QScalar& o) const { return !(*this == o); }
  bool operator<(const QScalar& o) const;  // arbitrary total order

  // Exact evaluation at q := t; throws InvalidArgument on t == 0 ("zero
  // evaluation point") or a denominator pole ("pole at evaluation point").
  mpq_class eval_at(const mpq_class& t) const;

  // Plain-text rendering: "<num>" if den == 1, else "(<num>) / (<den>)".
  std::string str() const;

 private:
  void normalize();
  LaurentPoly num_, den_;
};

// Quantum integer [n] = (q^n - q^-n)/(q - q^-1); requires n >= 1.
QScalar qint(int n);

// Parses a scalar expression: integer constants, "q" with an optional signed
// exponent ("q^-3"), quantum integers "[2]", parenthesized subexpressions,
// '^' integer powers, products written with '*' or by juxtaposition
// ("[2][3]", "2q^3"), quotients '/', and sums with '+'/'-'.  This grammar
// covers both the str() rendering and the bracketed form used by the rule
// tables.  Throws InvalidArgument with the offending position on bad input.
QScalar parse_scalar(const std::string& text);

}  // namespace spweb
