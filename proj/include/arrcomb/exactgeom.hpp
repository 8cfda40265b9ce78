#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "arrcomb/rational.hpp"

namespace arrcomb {

/// normal·x compared against offset; the comparison (=, >=, >) depends on
/// where the form is stored.
struct LinearForm {
  Vector normal;
  Rational offset;

  Rational evaluate(const Vector& x) const { return dot(normal, x) - offset; }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

bool operator<(const LinearForm& a, const LinearForm& b);

/// x = origin + sum_k z_k * directions[k]; the parametrization used for
/// restrictions. Directions come from the free columns of the reduced row
/// echelon form, so they are linearly independent.
struct AffineChart {
  Vector origin;
  std::vector<Vector> directions;

  int dim() const { return static_cast<int>(directions.size()); }
  Vector point_at(const Vector& z) const;
  /// Pulls a form on the ambient space back to chart coordinates.
  LinearForm pull_back(const LinearForm& form) const;
};

/// A nonempty affine subspace, stored as the reduced row echelon form of its
/// defining equations with pivots scaled to 1. Two flats are equal iff their
/// canonical forms are identical.
class Flat {
 public:
  static Flat ambient(int n);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return ambient_dim_ - static_cast<int>(equations_.size()); }
  const std::vector<LinearForm>& equations() const { return equations_; }

  bool contains(const Vector& x) const;
  /// True iff this flat lies inside the hyperplane normal·x = offset.
  bool inside(const LinearForm& hyperplane) const;
  /// Subspace inclusion: every point of this flat lies in other.
  bool subset_of(const Flat& other) const;

  AffineChart chart() const;

  friend bool operator==(const Flat&, const Flat&) = default;
  friend bool operator<(const Flat& a, const Flat& b);

 private:
  friend std::optional<Flat> flat_from_hyperplanes(std::span<const LinearForm>, int);
  Flat(int n, std::vector<LinearForm> eqs) : ambient_dim_(n), equations_(std::move(eqs)) {}

  int ambient_dim_ = 0;
  std::vector<LinearForm> equations_;
};

/// Intersection of the given hyperplanes, or nullopt if it is empty.
/// Throws DimensionMismatch when a normal has the wrong length.
std::optional<Flat> flat_from_hyperplanes(std::span<const LinearForm> hyperplanes, int ambient_dim);

struct PolyhedronDescr {
  int ambient_dim = 0;
  std::vector<LinearForm> equalities;           // normal·x == offset
  std::vector<LinearForm> strict_inequalities;  // normal·x >  offset
  std::vector<LinearForm> weak_inequalities;    // normal·x >= offset
};

/// Exact point satisfying every constraint (strict ones strictly), or nullopt.
std::optional<Vector> strict_interior_point(const PolyhedronDescr& p);

/// dim span(recession cone). Only closures are accepted: throws
/// InvalidArgument if p has strict inequalities.
int recession_span_dim(const PolyhedronDescr& p);

/// Whether the closure of p meets every translate of span(basis) in a bounded
/// set, i.e. recession cone ∩ span(basis) = {0}. Strict inequalities are read
/// as their closures.
bool bounded_within(const PolyhedronDescr& p, std::span<const Vector> basis);

/// Dimension of the span of the cone {y : eq·y = 0, ineq·y >= 0}.
int cone_span_dim(std::span<const Vector> equalities, std::span<const Vector> inequalities, int ambient_dim);

int rank(std::span<const Vector> vectors);

/// Basis of the row space (the nonzero rows of the reduced echelon form).
std::vector<Vector> row_space_basis(std::span<const Vector> vectors);

}  // namespace arrcomb
