#include "arrcomb/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace arrcomb {

namespace {

HyperplaneSet containing_set(const Arrangement& a, const Flat& x) {
  HyperplaneSet s(a.size());
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (x.inside(a.hyperplanes()[h])) s.insert(h);
  }
  return s;
}

}  // namespace

FlatList intersection_flats(const Arrangement& a) {
  // Closure under intersecting with single hyperplanes; every flat is reached
  // because each is an intersection of a chain of hyperplanes.
  std::map<Flat, HyperplaneSet> found;
  std::vector<const Flat*> queue;
  auto bottom = found.emplace(Flat::ambient(a.ambient_dim()), HyperplaneSet(a.size())).first;
  queue.push_back(&bottom->first);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Flat& x = *queue[q];
    const HyperplaneSet& inside = found.at(x);
    for (std::size_t h = 0; h < a.size(); ++h) {
      if (inside.contains(h)) continue;
      std::vector<LinearForm> eqs = x.equations();
      eqs.push_back(a.hyperplanes()[h]);
      auto y = flat_from_hyperplanes(eqs, a.ambient_dim());
      if (!y || found.count(*y)) continue;
      HyperplaneSet s = containing_set(a, *y);
      auto it = found.emplace(std::move(*y), std::move(s)).first;
      queue.push_back(&it->first);
    }
  }
  // Flat's operator< orders by number of equations first, so map order is
  // already dimension-descending with the ambient space first.
  FlatList out;
  out.flats.reserve(found.size());
  out.containing.reserve(found.size());
  for (auto& [flat, set] : found) {
    out.flats.push_back(flat);
    out.containing.push_back(set);
  }
  return out;
}

IntersectionPoset::IntersectionPoset(FlatList flats, int ambient_dim, Execution exec)
    : ambient_dim_(ambient_dim), flats_(std::move(flats)), mobius_(flats_.flats.size()) {
  const auto count = static_cast<std::ptrdiff_t>(flats_.flats.size());
  auto fill_row = [&](std::size_t x) {
    // Indices are dimension-descending, so every Z strictly between X and Y
    // has a smaller index than Y and is already in the row.
    auto& row = mobius_[x];
    row.emplace_back(x, Integer(1));
    for (std::size_t y = x + 1; y < flats_.flats.size(); ++y) {
      if (!leq(x, y)) continue;
      Integer sum = 0;
      for (const auto& [z, mu] : row) {
        if (leq(z, y)) sum += mu;
      }
      row.emplace_back(y, -sum);
    }
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t x = 0; x < count; ++x) fill_row(static_cast<std::size_t>(x));
  } else {
    for (std::ptrdiff_t x = 0; x < count; ++x) fill_row(static_cast<std::size_t>(x));
  }
}

bool IntersectionPoset::leq(std::size_t x, std::size_t y) const {
  return flats_.containing[x].subset_of(flats_.containing[y]);
}

Integer IntersectionPoset::mobius(std::size_t x, std::size_t y) const {
  const auto& row = mobius_[x];
  auto it = std::lower_bound(row.begin(), row.end(), y, [](const auto& e, std::size_t v) { return e.first < v; });
  if (it == row.end() || it->first != y) return 0;
  return it->second;
}

IntersectionPoset build_intersection_poset(const Arrangement& a, Execution exec) {
  return IntersectionPoset(intersection_flats(a), a.ambient_dim(), exec);
}

BivariatePolynomial characteristic_polynomial(const IntersectionPoset& poset) {
  BivariatePolynomial chi;
  for (const auto& [y, mu] : poset.upper_interval(0)) chi.add_term(Rational(mu), 0, poset.flat(y).dim());
  return chi;
}

BivariatePolynomial characteristic_polynomial(const Arrangement& a) {
  return characteristic_polynomial(build_intersection_poset(a));
}

BivariatePolynomial whitney_polynomial(const IntersectionPoset& poset) {
  const int n = poset.ambient_dim();
  std::map<std::pair<int, int>, Integer> acc;
  for (std::size_t x = 0; x < poset.size(); ++x) {
    const int xe = n - poset.flat(x).dim();
    for (const auto& [y, mu] : poset.upper_interval(x)) acc[{xe, poset.flat(y).dim()}] += mu;
  }
  BivariatePolynomial w;
  for (const auto& [e, c] : acc) w.add_term(Rational(c), e.first, e.second);
  return w;
}

BivariatePolynomial whitney_polynomial(const Arrangement& a) { return whitney_polynomial(build_intersection_poset(a)); }

BivariatePolynomial whitney_by_restrictions(const Arrangement& a) {
  BivariatePolynomial w;
  for (const Flat& x : intersection_flats(a).flats) {
    Restriction r = restrict_to_flat(a, x);
    w += BivariatePolynomial::monomial(1, a.ambient_dim() - x.dim(), 0) * characteristic_polynomial(r.arrangement);
  }
  return w;
}

}  // namespace arrcomb
