#include "arrcomb/faces.hpp"

#include <algorithm>
#include <optional>

#include "arrcomb/error.hpp"
#include "arrcomb/poset.hpp"

namespace arrcomb {

namespace {

LinearForm negated(const LinearForm& f) {
  LinearForm g{f.normal, -f.offset};
  for (auto& c : g.normal) c = -c;
  return g;
}

class RegionSearch {
 public:
  explicit RegionSearch(const Arrangement& a) : a_(a) { poly_.ambient_dim = a.ambient_dim(); }

  std::vector<std::pair<std::string, Vector>> run() {
    visit(0, Vector(a_.ambient_dim()));
    return std::move(out_);
  }

 private:
  // Depth-first over sign assignments. A child reuses the parent's witness
  // when it already lies strictly on the chosen side; otherwise the prefix
  // is tested (and a new witness found) with an exact feasibility LP.
  void visit(std::size_t h, const Vector& w) {
    if (h == a_.size()) {
      out_.emplace_back(sign_, w);
      return;
    }
    const Hyperplane& hp = a_.hyperplanes()[h];
    const Rational value = hp.evaluate(w);
    for (int side : {1, -1}) {
      poly_.strict_inequalities.push_back(side > 0 ? hp : negated(hp));
      std::optional<Vector> next;
      if (side * value > 0) {
        next = w;
      } else {
        next = strict_interior_point(poly_);
      }
      if (next) {
        sign_.push_back(side > 0 ? '+' : '-');
        visit(h + 1, *next);
        sign_.pop_back();
      }
      poly_.strict_inequalities.pop_back();
    }
  }

  const Arrangement& a_;
  PolyhedronDescr poly_;
  std::string sign_;
  std::vector<std::pair<std::string, Vector>> out_;
};

std::vector<Face> faces_on_flat(const Arrangement& a, const Flat& x) {
  Restriction r = restrict_to_flat(a, x);
  std::vector<Face> faces;
  for (auto& [local_sign, z] : enumerate_regions(r.arrangement)) {
    Face f;
    f.flat = x;
    f.dim = x.dim();
    f.sign.resize(a.size());
    for (std::size_t h = 0; h < a.size(); ++h) {
      int s;
      if (r.image[h] == Restriction::kContains) {
        s = 0;
      } else if (r.image[h] == Restriction::kDisjoint) {
        s = r.orientation[h];
      } else {
        s = r.orientation[h] * (local_sign[r.image[h]] == '+' ? 1 : -1);
      }
      f.sign[h] = s == 0 ? '0' : (s > 0 ? '+' : '-');
    }
    f.witness = r.chart.point_at(z);
    f.level = level_by_recession(a, f);
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& p, const Face& q) { return p.sign < q.sign; });
  return faces;
}

}  // namespace

std::string sign_vector(const Arrangement& a, const Vector& x) {
  if (static_cast<int>(x.size()) != a.ambient_dim()) throw DimensionMismatch("point dimension");
  std::string s(a.size(), '0');
  for (std::size_t h = 0; h < a.size(); ++h) {
    int c = sgn(a.hyperplanes()[h].evaluate(x));
    s[h] = c == 0 ? '0' : (c > 0 ? '+' : '-');
  }
  return s;
}

PolyhedronDescr relative_interior(const Arrangement& a, const std::string& sign) {
  if (sign.size() != a.size()) throw DimensionMismatch("sign vector length");
  PolyhedronDescr p;
  p.ambient_dim = a.ambient_dim();
  for (std::size_t h = 0; h < a.size(); ++h) {
    const Hyperplane& hp = a.hyperplanes()[h];
    switch (sign[h]) {
      case '0': p.equalities.push_back(hp); break;
      case '+': p.strict_inequalities.push_back(hp); break;
      case '-': p.strict_inequalities.push_back(negated(hp)); break;
      default: throw InvalidArgument("sign vector may only contain '+', '-', '0'");
    }
  }
  return p;
}

PolyhedronDescr closure(const Arrangement& a, const std::string& sign) {
  PolyhedronDescr p = relative_interior(a, sign);
  p.weak_inequalities = std::move(p.strict_inequalities);
  p.strict_inequalities.clear();
  return p;
}

Face locate_face(const Arrangement& a, const Vector& x) {
  Face f;
  f.sign = sign_vector(a, x);
  std::vector<LinearForm> zeros;
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (f.sign[h] == '0') zeros.push_back(a.hyperplanes()[h]);
  }
  f.flat = *flat_from_hyperplanes(zeros, a.ambient_dim());
  f.dim = f.flat.dim();
  f.witness = x;
  f.level = level_by_recession(a, f);
  return f;
}

std::vector<std::pair<std::string, Vector>> enumerate_regions(const Arrangement& a) { return RegionSearch(a).run(); }

std::vector<Face> enumerate_faces(const Arrangement& a, Execution exec) {
  FlatList flats = intersection_flats(a);
  const auto count = static_cast<std::ptrdiff_t>(flats.flats.size());
  std::vector<std::vector<Face>> per_flat(flats.flats.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) per_flat[i] = faces_on_flat(a, flats.flats[i]);
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) per_flat[i] = faces_on_flat(a, flats.flats[i]);
  }
  std::vector<Face> faces;
  for (auto& chunk : per_flat) {
    for (auto& f : chunk) faces.push_back(std::move(f));
  }
  return faces;
}

int level_by_recession(const Arrangement& a, const Face& f) { return recession_span_dim(closure(a, f.sign)); }

bool relatively_bounded(const Arrangement& a, const Face& f) {
  return bounded_within(closure(a, f.sign), a.normal_span_basis());
}

Digraph face_digraph(const DeformedBraidSpec& spec, const Vector& witness) {
  if (static_cast<int>(witness.size()) != spec.n) throw DimensionMismatch("witness dimension");
  Digraph g;
  g.n = spec.n;
  for (int i = 0; i < spec.n; ++i) {
    for (int j = i + 1; j < spec.n; ++j) {
      const auto& offs = spec.at(i, j);
      Rational diff = witness[i] - witness[j];
      if (diff >= offs.front()) g.edges.emplace_back(i, j);
      if (diff <= offs.back()) g.edges.emplace_back(j, i);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

Digraph face_digraph(const Arrangement& a, const Face& f) {
  const auto* spec = a.deformed_braid();
  if (!spec) throw InvalidArgument("face digraph needs a deformed braid arrangement");
  return face_digraph(*spec, f.witness);
}

FaceDigraph order_components(const Digraph& g) {
  const int n = g.n;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidArgument("edge endpoint out of range");
    adj[u][v] = 1;
  }
  auto reach = adj;
  for (int i = 0; i < n; ++i) reach[i][i] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = 1;
      }
    }
  }
  std::vector<int> comp_of(n, -1);
  std::vector<std::vector<int>> comps;
  for (int i = 0; i < n; ++i) {
    if (comp_of[i] != -1) continue;
    comps.emplace_back();
    for (int j = i; j < n; ++j) {
      if (reach[i][j] && reach[j][i]) {
        comp_of[j] = static_cast<int>(comps.size()) - 1;
        comps.back().push_back(j);
      }
    }
  }
  // In a transitive tournament the number of components a component reaches
  // is distinct for each, so sorting by it gives the unique forward order.
  std::vector<int> reached(comps.size(), 0);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (std::size_t d = 0; d < comps.size(); ++d) {
      if (c != d && reach[comps[c].front()][comps[d].front()]) ++reached[c];
    }
  }
  std::vector<std::size_t> order(comps.size());
  for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) { return reached[p] > reached[q]; });

  FaceDigraph out;
  out.n = n;
  out.edges = g.edges;
  for (std::size_t c : order) out.components.push_back(comps[c]);
  for (std::size_t p = 0; p < out.components.size(); ++p) {
    for (std::size_t q = p + 1; q < out.components.size(); ++q) {
      for (int u : out.components[p]) {
        for (int v : out.components[q]) {
          if (!adj[u][v] || adj[v][u]) {
            throw StructureViolation("condensation is not a transitive tournament (vertices " +
                                     std::to_string(u + 1) + ", " + std::to_string(v + 1) + ")");
          }
        }
      }
    }
  }
  return out;
}

int level_by_components(const Arrangement& a, const Face& f) {
  return static_cast<int>(order_components(face_digraph(a, f)).components.size());
}

FaceCountTable count_table(const Arrangement& a, const std::vector<Face>& faces, Execution exec) {
  const int n = a.ambient_dim();
  FaceCountTable t;
  t.n = n;
  t.f.assign(n + 1, std::vector<std::int64_t>(n + 1, 0));
  t.b.assign(n + 1, 0);
  std::vector<char> bounded(faces.size());
  const auto count = static_cast<std::ptrdiff_t>(faces.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) bounded[i] = relatively_bounded(a, faces[i]);
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) bounded[i] = relatively_bounded(a, faces[i]);
  }
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const Face& f = faces[i];
    if (f.level < 0 || f.level > f.dim || f.dim > n) throw StructureViolation("face level exceeds its dimension");
    ++t.f[f.dim][f.level];
    if (bounded[i]) ++t.b[f.dim];
    if (f.dim == n) ++t.r;
  }
  return t;
}

FaceCountTable count_table(const Arrangement& a) { return count_table(a, enumerate_faces(a)); }

}  // namespace arrcomb
