#pragma once

#include <string>
#include <vector>

#include "arrcomb/arrangement.hpp"
#include "arrcomb/polynomial.hpp"
#include "arrcomb/rational.hpp"
#include "oracle.hpp"

namespace testing {

inline arrcomb::Rational q(const char* s) { return arrcomb::parse_rational(s); }

inline arrcomb::Vector vec(std::initializer_list<long> xs) {
  arrcomb::Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// Polynomial from {coeff, x-degree, t-degree} triples.
struct Term {
  long c;
  int x;
  int t;
};
inline arrcomb::BivariatePolynomial poly(std::initializer_list<Term> terms) {
  arrcomb::BivariatePolynomial p;
  for (const auto& term : terms) p.add_term(term.c, term.x, term.t);
  return p;
}

inline oracle::IntOffsets int_offsets(const arrcomb::DeformedBraidSpec& s) {
  oracle::IntOffsets o;
  for (const auto& [k, list] : s.offsets) {
    for (const auto& r : list) o[k].push_back(r.get_num().get_si());
  }
  return o;
}

inline oracle::IntArrangement int_arrangement(const arrcomb::DeformedBraidSpec& s) {
  return oracle::deformed_braid(s.n, int_offsets(s));
}

inline oracle::IntArrangement int_arrangement(const arrcomb::TypeBSpec& s) {
  auto conv = [](const arrcomb::PairOffsets& p) {
    oracle::IntOffsets o;
    for (const auto& [k, list] : p) {
      for (const auto& r : list) o[k].push_back(r.get_num().get_si());
    }
    return o;
  };
  std::map<int, std::vector<long>> axis;
  for (const auto& [i, list] : s.axis_offsets) {
    for (const auto& r : list) axis[i].push_back(r.get_num().get_si());
  }
  return oracle::type_b(s.n, conv(s.diff_offsets), conv(s.sum_offsets), axis);
}

}  // namespace testing
