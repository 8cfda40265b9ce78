#pragma once

#include <cstdint>
#include <vector>

#include "arrcomb/arrangement.hpp"
#include "arrcomb/execution.hpp"
#include "arrcomb/polynomial.hpp"

namespace arrcomb {

/// Bit set over the hyperplanes of one arrangement.
class HyperplaneSet {
 public:
  explicit HyperplaneSet(std::size_t size = 0) : words_((size + 63) / 64, 0) {}

  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool subset_of(const HyperplaneSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~o.words_[w]) return false;
    }
    return true;
  }

  friend bool operator==(const HyperplaneSet&, const HyperplaneSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

/// The flats of A, sorted by dimension (descending) and then canonical form,
/// so index 0 is the ambient space. The order is the canonical flat order
/// used everywhere downstream.
struct FlatList {
  std::vector<Flat> flats;
  std::vector<HyperplaneSet> containing;  // hyperplanes containing each flat
};

FlatList intersection_flats(const Arrangement& a);

/// L(A) ordered by reverse inclusion with its Möbius function.
class IntersectionPoset {
 public:
  IntersectionPoset(FlatList flats, int ambient_dim, Execution exec);

  int ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return flats_.flats.size(); }
  const std::vector<Flat>& flats() const { return flats_.flats; }
  const Flat& flat(std::size_t i) const { return flats_.flats[i]; }
  const HyperplaneSet& containing(std::size_t i) const { return flats_.containing[i]; }

  /// X <= Y iff Y ⊆ X.
  bool leq(std::size_t x, std::size_t y) const;
  /// μ(X, Y); zero when X is not below Y.
  Integer mobius(std::size_t x, std::size_t y) const;
  /// (Y, μ(X,Y)) for every Y >= X, ascending in Y.
  const std::vector<std::pair<std::size_t, Integer>>& upper_interval(std::size_t x) const { return mobius_[x]; }

 private:
  int ambient_dim_;
  FlatList flats_;
  std::vector<std::vector<std::pair<std::size_t, Integer>>> mobius_;
};

IntersectionPoset build_intersection_poset(const Arrangement& a, Execution exec = Execution::parallel);

/// Σ_Y μ(bottom, Y) t^{dim Y}.
BivariatePolynomial characteristic_polynomial(const IntersectionPoset& poset);
BivariatePolynomial characteristic_polynomial(const Arrangement& a);

/// Σ_{X <= Y} μ(X,Y) x^{n - dim X} t^{dim Y}.
BivariatePolynomial whitney_polynomial(const IntersectionPoset& poset);
BivariatePolynomial whitney_polynomial(const Arrangement& a);

/// Σ_X x^{n - dim X} χ(A/X, t), computed from the restrictions rather than
/// the Möbius table of A. Independent second route to the Whitney polynomial.
BivariatePolynomial whitney_by_restrictions(const Arrangement& a);

}  // namespace arrcomb
