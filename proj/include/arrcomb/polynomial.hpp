#pragma once

#include <map>
#include <string>
#include <utility>

#include "arrcomb/rational.hpp"

namespace arrcomb {

/// Polynomial in x and t with rational coefficients. Zero coefficients are
/// never stored, so structural equality is value equality.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<int, int>;  // (x-degree, t-degree)

  BivariatePolynomial() = default;
  static BivariatePolynomial constant(const Rational& c);
  static BivariatePolynomial monomial(const Rational& c, int x_exp, int t_exp);
  static BivariatePolynomial t() { return monomial(1, 0, 1); }
  static BivariatePolynomial x() { return monomial(1, 1, 0); }

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  Rational coefficient(int x_exp, int t_exp) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Rational& c, int x_exp, int t_exp);

  BivariatePolynomial& operator+=(const BivariatePolynomial& o);
  BivariatePolynomial& operator-=(const BivariatePolynomial& o);
  BivariatePolynomial& operator*=(const Rational& c);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(BivariatePolynomial a, const Rational& c) { return a *= c; }
  BivariatePolynomial operator-() const { return *this * Rational(-1); }

  Rational evaluate(const Rational& x, const Rational& t) const;
  /// p(-x, t).
  BivariatePolynomial negate_x() const;
  /// p(0, t).
  BivariatePolynomial at_x_zero() const;
  /// Substitutes a polynomial for t (x is left alone).
  BivariatePolynomial substitute_t(const BivariatePolynomial& value) const;

  /// Human-readable, e.g. "t^2 - 2*t + 2*x*t".
  std::string to_string() const;

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  std::map<Exponents, Rational> terms_;
};

}  // namespace arrcomb
