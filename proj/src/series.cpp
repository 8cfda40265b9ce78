#include "arrcomb/series.hpp"

#include <string>

#include "arrcomb/error.hpp"

namespace arrcomb {

Integer stirling2(int n, int l) {
  if (n < 0 || l < 0 || l > n) {
    throw InvalidArgument("stirling2 needs 0 <= l <= n, got (" + std::to_string(n) + ", " + std::to_string(l) + ")");
  }
  std::vector<Integer> row{1};  // S(0, ·)
  for (int m = 1; m <= n; ++m) {
    std::vector<Integer> next(m + 1, 0);
    for (int k = 1; k <= m; ++k) {
      Integer prev_same = k < static_cast<int>(row.size()) ? row[k] : Integer(0);
      next[k] = row[k - 1] + k * prev_same;
    }
    row = std::move(next);
  }
  return row[l];
}

BivariatePolynomial binom_poly(int k, const BivariatePolynomial& top) {
  BivariatePolynomial r = BivariatePolynomial::constant(1);
  for (int i = 0; i < k; ++i) r = r * (top - BivariatePolynomial::constant(i));
  Rational inv_fact(Integer(1), factorial(static_cast<unsigned>(k)));
  inv_fact.canonicalize();
  return r * inv_fact;
}

BivariatePolynomial binom_poly(int l, BinomShift shift) {
  if (l < 0) throw InvalidArgument("binomial index must be nonnegative");
  BivariatePolynomial top = BivariatePolynomial::t();
  if (shift == BinomShift::half) {
    top = (top - BivariatePolynomial::constant(1)) * Rational(1, 2);
  }
  return binom_poly(l, top);
}

TruncatedSeries::TruncatedSeries(int truncation) {
  if (truncation < 0) throw InvalidArgument("truncation order must be nonnegative");
  coeffs_.resize(truncation + 1);
}

TruncatedSeries TruncatedSeries::one(int truncation) {
  TruncatedSeries s(truncation);
  s.coeffs_[0] = BivariatePolynomial::constant(1);
  return s;
}

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.truncation() != b.truncation()) throw InvalidArgument("series truncation orders differ");
}

}  // namespace

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_order(*this, o);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_order(*this, o);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const BivariatePolynomial& scalar) const {
  TruncatedSeries r = *this;
  for (auto& c : r.coeffs_) c = c * scalar;
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const int N = a.truncation();
  TruncatedSeries r(N);
  for (int n = 0; n <= N; ++n) {
    for (int k = 0; k <= n; ++k) {
      if (a.coeffs_[k].is_zero() || b.coeffs_[n - k].is_zero()) continue;
      r.coeffs_[n] += a.coeffs_[k] * b.coeffs_[n - k] * Rational(binomial(n, k));
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::power(int k) const {
  if (k < 0) throw InvalidArgument("negative series power");
  TruncatedSeries r = one(truncation());
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

TruncatedSeries TruncatedSeries::negate_xy() const {
  TruncatedSeries r(truncation());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    r.coeffs_[n] = coeffs_[n].negate_x();
    if (n % 2) r.coeffs_[n] = -r.coeffs_[n];
  }
  return r;
}

TruncatedSeries TruncatedSeries::at_x_zero() const {
  TruncatedSeries r(truncation());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) r.coeffs_[n] = coeffs_[n].at_x_zero();
  return r;
}

TruncatedSeries binomial_power(const TruncatedSeries& u, const BivariatePolynomial& exponent) {
  if (!u[0].is_zero()) throw InvalidArgument("binomial_power needs a series without constant term");
  const int N = u.truncation();
  TruncatedSeries result(N);
  TruncatedSeries u_k = TruncatedSeries::one(N);
  // u^k starts at y^k, so terms with k > N vanish after truncation.
  for (int k = 0; k <= N; ++k) {
    result += u_k * binom_poly(k, exponent);
    u_k = u_k * u;
  }
  return result;
}

TruncatedSeries binomial_power(const TruncatedSeries& u) { return binomial_power(u, BivariatePolynomial::t()); }

TruncatedSeries egf_truncated(const std::vector<FaceCountTable>& tables, int l) {
  const int N = static_cast<int>(tables.size());
  TruncatedSeries s(N);
  for (int n = 1; n <= N; ++n) {
    const FaceCountTable& t = tables[n - 1];
    if (t.n != n) throw InvalidArgument("count table " + std::to_string(n) + " has the wrong size");
    if (l < 0 || l > n) continue;
    for (int d = l; d <= n; ++d) s[n].add_term(Rational(t.at(d, l)), n - d, 0);
  }
  return s;
}

}  // namespace arrcomb
