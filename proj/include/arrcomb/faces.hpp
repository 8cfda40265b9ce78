#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "arrcomb/arrangement.hpp"
#include "arrcomb/execution.hpp"

namespace arrcomb {

/// A relatively open face. `sign` has one character per hyperplane of the
/// owning arrangement: '+', '-' or '0' (on the hyperplane).
struct Face {
  Flat flat = Flat::ambient(0);
  std::string sign;
  Vector witness;
  int dim = 0;
  int level = 0;
};

/// Faces are determined by their sign vectors.
inline bool same_face(const Face& a, const Face& b) { return a.sign == b.sign; }

std::string sign_vector(const Arrangement& a, const Vector& x);

PolyhedronDescr relative_interior(const Arrangement& a, const std::string& sign);
PolyhedronDescr closure(const Arrangement& a, const std::string& sign);

/// The face of A containing x, with x as its witness.
Face locate_face(const Arrangement& a, const Vector& x);

/// Regions of A as (sign vector, interior point) pairs, sorted by sign vector.
std::vector<std::pair<std::string, Vector>> enumerate_regions(const Arrangement& a);

/// Every face of A: regions of each restriction A/X, flats in canonical order,
/// then sign vectors ascending ('+' < '-' < '0' in ASCII). Levels are filled
/// by level_by_recession. Both execution modes give identical output.
std::vector<Face> enumerate_faces(const Arrangement& a, Execution exec = Execution::parallel);

/// dim span(recession cone of the closure).
int level_by_recession(const Arrangement& a, const Face& f);

/// F ∩ W(A) bounded.
bool relatively_bounded(const Arrangement& a, const Face& f);

struct Digraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // sorted, 0-based
};

struct FaceDigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  /// Strong components (sorted vertex lists) in the unique order where every
  /// cross edge points from an earlier to a later component.
  std::vector<std::vector<int>> components;
};

/// Edge i->j iff x_i - x_j >= first offset of (i,j), edge j->i iff
/// x_i - x_j <= last offset, evaluated at the face witness. Throws
/// InvalidArgument for arrangements that are not deformed braid.
Digraph face_digraph(const Arrangement& a, const Face& f);
Digraph face_digraph(const DeformedBraidSpec& spec, const Vector& witness);

/// Throws StructureViolation if the condensation is not a transitive
/// tournament with all cross edges oriented forward.
FaceDigraph order_components(const Digraph& g);

int level_by_components(const Arrangement& a, const Face& f);

struct FaceCountTable {
  int n = 0;
  std::vector<std::vector<std::int64_t>> f;  // f[d][l], 0 <= l <= d <= n
  std::vector<std::int64_t> b;               // relatively bounded faces per dimension
  std::int64_t r = 0;                        // regions

  std::int64_t at(int d, int l) const { return f[d][l]; }
};

FaceCountTable count_table(const Arrangement& a, const std::vector<Face>& faces, Execution exec = Execution::parallel);
FaceCountTable count_table(const Arrangement& a);

}  // namespace arrcomb
