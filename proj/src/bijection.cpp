#include "arrcomb/bijection.hpp"

#include <algorithm>
#include <numeric>

#include "arrcomb/error.hpp"

namespace arrcomb {

namespace {

Vector restrict_point(const Vector& x, const std::vector<int>& block) {
  Vector out;
  out.reserve(block.size());
  for (int i : block) out.push_back(x[i]);
  return out;
}

void check_witness(const Arrangement& a, const Face& f, const char* what) {
  if (static_cast<int>(f.witness.size()) != a.ambient_dim()) {
    throw InvalidArgument(std::string(what) + " witness has the wrong dimension");
  }
  if (!f.sign.empty() && f.sign != sign_vector(a, f.witness)) {
    throw InvalidArgument(std::string(what) + " witness does not reproduce its sign vector");
  }
}

void set_partitions(int n, int l, int next, int used, std::vector<int>& label, std::vector<OrderedPartition>& out) {
  if (next == n) {
    if (used != l) return;
    OrderedPartition p;
    p.blocks.assign(l, {});
    for (int i = 0; i < n; ++i) p.blocks[label[i]].push_back(i);
    out.push_back(std::move(p));
    return;
  }
  if (n - next < l - used) return;
  for (int b = 0; b <= std::min(used, l - 1); ++b) {
    label[next] = b;
    set_partitions(n, l, next + 1, std::max(used, b + 1), label, out);
  }
}

}  // namespace

void OrderedPartition::validate(int n) const {
  std::vector<char> seen(n, 0);
  int total = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw InvalidArgument("partition block is empty");
    for (std::size_t k = 0; k < block.size(); ++k) {
      int v = block[k];
      if (v < 0 || v >= n) throw InvalidArgument("partition element out of range");
      if (k > 0 && block[k - 1] >= v) throw InvalidArgument("partition block must be strictly increasing");
      if (seen[v]) throw InvalidArgument("partition blocks overlap");
      seen[v] = 1;
      ++total;
    }
  }
  if (total != n) throw InvalidArgument("partition does not cover every vertex");
}

std::vector<OrderedPartition> ordered_partitions(int n, int l) {
  std::vector<OrderedPartition> unordered;
  if (l < 1 || l > n) return {};
  std::vector<int> label(n, 0);
  set_partitions(n, l, 0, 0, label, unordered);
  std::vector<OrderedPartition> out;
  for (const auto& p : unordered) {
    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      OrderedPartition q;
      for (int b : perm) q.blocks.push_back(p.blocks[b]);
      out.push_back(std::move(q));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PhiImage phi(const DeformedBraidSpec& spec, const Face& face) {
  Arrangement a = build_deformed_braid(spec);
  check_witness(a, face, "face");
  FaceDigraph g = order_components(face_digraph(spec, face.witness));
  PhiImage image;
  image.partition.blocks = g.components;
  for (const auto& block : g.components) {
    Arrangement sub = build_deformed_braid(induced_subarrangement(spec, block));
    Face part = locate_face(sub, restrict_point(face.witness, block));
    if (part.level != 1) throw StructureViolation("component face is not level 1");
    image.parts.push_back(std::move(part));
  }
  return image;
}

Face phi_inverse(const DeformedBraidSpec& spec, const OrderedPartition& partition, const std::vector<Face>& parts) {
  spec.validate();
  partition.validate(spec.n);
  const auto& blocks = partition.blocks;
  if (parts.size() != blocks.size()) throw InvalidArgument("need one part per block");

  Rational lo, hi;
  bool any = false;
  for (std::size_t p = 0; p < blocks.size(); ++p) {
    Arrangement sub = build_deformed_braid(induced_subarrangement(spec, blocks[p]));
    check_witness(sub, parts[p], "part");
    if (level_by_recession(sub, locate_face(sub, parts[p].witness)) != 1) {
      throw InvalidArgument("part " + std::to_string(p + 1) + " is not a level-1 face");
    }
    for (const auto& c : parts[p].witness) {
      if (!any || c < lo) lo = c;
      if (!any || c > hi) hi = c;
      any = true;
    }
  }
  const Rational step = spec.max_abs_offset() + (hi - lo) + 1;
  const auto l = static_cast<long>(blocks.size());
  Vector x(spec.n);
  for (long p = 0; p < l; ++p) {
    Rational shift = step * (l - 1 - p);
    for (std::size_t k = 0; k < blocks[p].size(); ++k) x[blocks[p][k]] = parts[p].witness[k] + shift;
  }
  return locate_face(build_deformed_braid(spec), x);
}

}  // namespace arrcomb
