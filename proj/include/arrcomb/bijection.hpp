#pragma once

#include <vector>

#include "arrcomb/arrangement.hpp"
#include "arrcomb/faces.hpp"

namespace arrcomb {

/// (π_1, ..., π_l): disjoint nonempty sorted blocks covering {0, ..., n-1}.
struct OrderedPartition {
  std::vector<std::vector<int>> blocks;

  /// Throws InvalidArgument if the blocks do not partition {0..n-1}.
  void validate(int n) const;

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
  friend auto operator<=>(const OrderedPartition&, const OrderedPartition&) = default;
};

/// All ordered partitions of {0..n-1} into l blocks, in a fixed order.
std::vector<OrderedPartition> ordered_partitions(int n, int l);

/// Image of a face: the strong components of G(F) in forward order, and for
/// each component the face of the induced sub-arrangement containing the
/// witness restricted to that component.
struct PhiImage {
  OrderedPartition partition;
  std::vector<Face> parts;
};

/// Throws InvalidArgument when the face's witness does not reproduce its
/// sign vector, StructureViolation if a part is not level 1.
PhiImage phi(const DeformedBraidSpec& spec, const Face& face);

/// Shifts part p by T_p = (l - p)(B + s + 1) (p = 1..l, B = max |offset|,
/// s = spread of all part coordinates) so every cross-block difference
/// exceeds B, scatters into R^n, and returns the face of A_n containing the
/// assembled point. Throws InvalidArgument for a bad partition, a part that
/// is not a face of its induced sub-arrangement, or a part of level != 1.
Face phi_inverse(const DeformedBraidSpec& spec, const OrderedPartition& partition, const std::vector<Face>& parts);

}  // namespace arrcomb
