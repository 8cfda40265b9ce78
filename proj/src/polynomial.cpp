#include "arrcomb/polynomial.hpp"

#include <algorithm>
#include <vector>

namespace arrcomb {

BivariatePolynomial BivariatePolynomial::constant(const Rational& c) { return monomial(c, 0, 0); }

BivariatePolynomial BivariatePolynomial::monomial(const Rational& c, int x_exp, int t_exp) {
  BivariatePolynomial p;
  p.add_term(c, x_exp, t_exp);
  return p;
}

Rational BivariatePolynomial::coefficient(int x_exp, int t_exp) const {
  auto it = terms_.find({x_exp, t_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePolynomial::add_term(const Rational& c, int x_exp, int t_exp) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Exponents{x_exp, t_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(c, e.first, e.second);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(-c, e.first, e.second);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ca * cb, ea.first + eb.first, ea.second + eb.second);
  }
  return r;
}

Rational BivariatePolynomial::evaluate(const Rational& x, const Rational& t) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int k = 0; k < e.first; ++k) term *= x;
    for (int k = 0; k < e.second; ++k) term *= t;
    sum += term;
  }
  return sum;
}

BivariatePolynomial BivariatePolynomial::negate_x() const {
  BivariatePolynomial r;
  for (const auto& [e, c] : terms_) r.add_term(e.first % 2 ? Rational(-c) : c, e.first, e.second);
  return r;
}

BivariatePolynomial BivariatePolynomial::at_x_zero() const {
  BivariatePolynomial r;
  for (const auto& [e, c] : terms_) {
    if (e.first == 0) r.add_term(c, 0, e.second);
  }
  return r;
}

BivariatePolynomial BivariatePolynomial::substitute_t(const BivariatePolynomial& value) const {
  BivariatePolynomial r;
  std::vector<BivariatePolynomial> powers{constant(1)};
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(powers.size()) <= e.second) powers.push_back(powers.back() * value);
    r += monomial(c, e.first, 0) * powers[e.second];
  }
  return r;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest t-degree first, then lowest x-degree, so t^n leads.
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second > b.first.second;
    return a.first.first < b.first.first;
  });
  bool first = true;
  for (const auto& [e, c] : ordered) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string body;
    bool unit = mag == 1;
    if (!unit || (e.first == 0 && e.second == 0)) body = mag.get_str();
    auto append = [&](const char* var, int exp) {
      if (exp == 0) return;
      if (!body.empty()) body += "*";
      body += var;
      if (exp > 1) body += "^" + std::to_string(exp);
    };
    append("x", e.first);
    append("t", e.second);
    out += body;
  }
  return out;
}

}  // namespace arrcomb
