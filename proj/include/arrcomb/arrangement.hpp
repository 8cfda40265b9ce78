#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "arrcomb/exactgeom.hpp"

namespace arrcomb {

/// Hyperplanes are LinearForms kept in canonical form: primitive integer
/// normal whose first nonzero coordinate is positive, offset rescaled with it.
using Hyperplane = LinearForm;

struct Canonicalized {
  Hyperplane hyperplane;
  int orientation;  // sign of the factor applied to the input form
};

/// Throws InvalidArgument for a zero normal.
Canonicalized canonicalize(const LinearForm& form);

// Vertices are 0-based throughout the library; the JSON layer shifts to 1-based.
using PairOffsets = std::map<std::pair<int, int>, std::vector<Rational>>;

/// x_i - x_j = a for every listed a, one list per pair i < j.
struct DeformedBraidSpec {
  int n = 1;
  PairOffsets offsets;

  /// Largest |a| over all offsets (0 when there are no pairs).
  Rational max_abs_offset() const;
  const std::vector<Rational>& at(int i, int j) const { return offsets.at({i, j}); }
  /// Throws InvalidSpec on a missing pair, an empty list or an unsorted list.
  void validate() const;

  friend bool operator==(const DeformedBraidSpec&, const DeformedBraidSpec&) = default;
};

/// Non-degenerate deformation of the type B Coxeter arrangement: every list
/// nonempty and strictly increasing.
struct TypeBSpec {
  int n = 1;
  PairOffsets diff_offsets;                      // x_i - x_j
  PairOffsets sum_offsets;                       // x_i + x_j
  std::map<int, std::vector<Rational>> axis_offsets;  // x_i

  void validate() const;

  friend bool operator==(const TypeBSpec&, const TypeBSpec&) = default;
};

struct GenericSpec {
  friend bool operator==(const GenericSpec&, const GenericSpec&) = default;
};

using ArrangementSpec = std::variant<GenericSpec, DeformedBraidSpec, TypeBSpec>;

enum class ArrangementKind { generic, deformed_braid, type_b };

std::string_view kind_name(ArrangementKind kind);

class Arrangement {
 public:
  /// Canonicalizes every hyperplane and drops repeats, keeping first occurrences.
  static Arrangement generic(int ambient_dim, const std::vector<LinearForm>& hyperplanes);

  int ambient_dim() const { return ambient_dim_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const ArrangementSpec& spec() const { return spec_; }
  ArrangementKind kind() const { return static_cast<ArrangementKind>(spec_.index()); }
  /// Basis of W(A), the span of all normals.
  const std::vector<Vector>& normal_span_basis() const { return normal_span_basis_; }

  /// nullptr unless kind() == deformed_braid.
  const DeformedBraidSpec* deformed_braid() const { return std::get_if<DeformedBraidSpec>(&spec_); }
  const TypeBSpec* type_b() const { return std::get_if<TypeBSpec>(&spec_); }

 private:
  friend Arrangement build_deformed_braid(const DeformedBraidSpec&);
  friend Arrangement build_type_b(const TypeBSpec&);

  Arrangement(int n, std::vector<Hyperplane> hyperplanes, ArrangementSpec spec);

  int ambient_dim_ = 0;
  std::vector<Hyperplane> hyperplanes_;
  ArrangementSpec spec_;
  std::vector<Vector> normal_span_basis_;
};

/// Hyperplanes ordered by pair (lexicographic), then offset ascending.
Arrangement build_deformed_braid(const DeformedBraidSpec& spec);

/// x_i - x_j block, then x_i + x_j block, then x_i block; each ordered like the
/// deformed braid case.
Arrangement build_type_b(const TypeBSpec& spec);

enum class Family { braid, shi, catalan, semiorder, linial };

/// Throws InvalidArgument for an unknown name.
Family parse_family(std::string_view name);
std::string_view family_name(Family family);

/// Offsets per pair: braid {0}; Shi {-a+1..a}; Catalan {-a..a};
/// semiorder {-a..-1, 1..a}; Linial {1}. The parameter a is ignored for braid
/// and Linial.
DeformedBraidSpec family_spec(Family family, int n, int a = 1);
Arrangement build_family(Family family, int n, int a = 1);

/// A restriction A/X in the intrinsic coordinates of X.
struct Restriction {
  static constexpr int kContains = -1;
  static constexpr int kDisjoint = -2;

  Flat flat;
  AffineChart chart;
  Arrangement arrangement;
  // For each hyperplane of the parent: index of its trace in `arrangement`,
  // or kContains / kDisjoint.
  std::vector<int> image;
  // Sign relating the parent form to its trace: parent(x(z)) has the sign of
  // orientation * trace(z). For kDisjoint it is the constant sign on X.
  std::vector<int> orientation;
};

/// Whether X is an intersection of hyperplanes of A (the ambient space counts).
bool is_flat_of(const Arrangement& a, const Flat& x);

/// Throws NotAFlat if X is not in L(A).
Restriction restrict_to_flat(const Arrangement& a, const Flat& x);

/// Offsets zeroed, repeats merged. Deformed braid input yields the braid
/// arrangement and type B input yields the type B Coxeter arrangement.
Arrangement centralize(const Arrangement& a);

/// {H in A : V ⊆ H or V ∩ H = ∅}, order inherited. V must be a flat of the
/// centralization (throws NotAFlat otherwise).
Arrangement localize(const Arrangement& a, const Flat& v);

/// Offsets for pairs of `subset` (0-based, strictly increasing), relabeled to
/// 0..k-1. Throws InvalidArgument when subset is empty, unsorted or out of range.
DeformedBraidSpec induced_subarrangement(const DeformedBraidSpec& spec, const std::vector<int>& subset);

}  // namespace arrcomb
