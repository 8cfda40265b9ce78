#pragma once

#include <vector>

#include "arrcomb/faces.hpp"
#include "arrcomb/polynomial.hpp"

namespace arrcomb {

/// S(n, l) by the recurrence S(n,l) = S(n-1,l-1) + l S(n-1,l).
/// Throws InvalidArgument unless 0 <= l <= n.
Integer stirling2(int n, int l);

enum class BinomShift {
  none,  // C(t, l)
  half,  // C((t-1)/2, l)
};

BivariatePolynomial binom_poly(int l, BinomShift shift);

/// C(top, k) = top (top-1) ... (top-k+1) / k! for a polynomial top.
BivariatePolynomial binom_poly(int k, const BivariatePolynomial& top);

/// Σ_{n<=N} c_n y^n / n!, coefficients polynomial in x and t.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int truncation);
  static TruncatedSeries one(int truncation);

  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BivariatePolynomial& operator[](int n) const { return coeffs_.at(n); }
  BivariatePolynomial& operator[](int n) { return coeffs_.at(n); }
  const std::vector<BivariatePolynomial>& coeffs() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  TruncatedSeries operator-() const;
  TruncatedSeries operator*(const BivariatePolynomial& scalar) const;

  /// EGF (binomial) product: c_n = Σ_k C(n,k) a_k b_{n-k}.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries power(int k) const;

  /// (x, y) -> (-x, -y): c_n(x) -> (-1)^n c_n(-x).
  TruncatedSeries negate_xy() const;
  TruncatedSeries at_x_zero() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BivariatePolynomial> coeffs_;
};

/// (1 + u)^exponent as the formal binomial series Σ_k C(exponent, k) u^k.
/// Throws InvalidArgument when u has a nonzero constant term.
TruncatedSeries binomial_power(const TruncatedSeries& u, const BivariatePolynomial& exponent);
/// (1 + u)^t.
TruncatedSeries binomial_power(const TruncatedSeries& u);

/// F_l truncated at N = tables.size(); tables[n-1] belongs to A_n.
/// c_n = Σ_d f_{d,l}(A_n) x^{n-d}.
TruncatedSeries egf_truncated(const std::vector<FaceCountTable>& tables, int l);

}  // namespace arrcomb
