#include "arrcomb/exactgeom.hpp"

#include <algorithm>
#include <string>

#include "arrcomb/error.hpp"
#include "arrcomb/lp.hpp"

namespace arrcomb {

namespace {

struct Echelon {
  std::vector<Vector> rows;  // nonzero rows, pivots scaled to 1, fully reduced
  std::vector<int> pivots;
  bool consistent = true;
};

// Gauss-Jordan over the first `cols` columns; any trailing column is carried
// along as a right-hand side.
Echelon reduce(std::vector<Vector> rows, int cols) {
  Echelon e;
  std::size_t next = 0;
  for (int c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    Vector& pr = rows[next];
    if (pr[c] != 1) {
      Rational inv = 1 / pr[c];
      for (auto& v : pr) v *= inv;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == next || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < pr.size(); ++j) {
        if (pr[j] != 0) rows[i][j] -= f * pr[j];
      }
    }
    e.pivots.push_back(c);
    ++next;
  }
  for (std::size_t i = next; i < rows.size(); ++i) {
    if (!is_zero(rows[i])) e.consistent = false;
  }
  rows.resize(next);
  e.rows = std::move(rows);
  return e;
}

void check_width(const Vector& v, int n, const char* what) {
  if (static_cast<int>(v.size()) != n) {
    throw DimensionMismatch(std::string(what) + ": expected length " + std::to_string(n) + ", got " +
                            std::to_string(v.size()));
  }
}

void check_polyhedron(const PolyhedronDescr& p) {
  for (const auto& f : p.equalities) check_width(f.normal, p.ambient_dim, "equality");
  for (const auto& f : p.strict_inequalities) check_width(f.normal, p.ambient_dim, "strict inequality");
  for (const auto& f : p.weak_inequalities) check_width(f.normal, p.ambient_dim, "weak inequality");
}

Vector chart_coefficients(const AffineChart& chart, const Vector& normal) {
  Vector g(chart.directions.size());
  for (std::size_t k = 0; k < chart.directions.size(); ++k) g[k] = dot(normal, chart.directions[k]);
  return g;
}

// The free variables are split as z = z⁺ - z⁻ for the nonnegative-variable LP.
void append_split(Vector& row, const Vector& g, int sign) {
  for (const auto& c : g) row.push_back(sign * c);
  for (const auto& c : g) row.push_back(-sign * c);
}

}  // namespace

bool operator<(const LinearForm& a, const LinearForm& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.offset < b.offset;
}

Vector AffineChart::point_at(const Vector& z) const {
  Vector x = origin;
  for (std::size_t k = 0; k < directions.size(); ++k) {
    if (z[k] == 0) continue;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += z[k] * directions[k][i];
  }
  return x;
}

LinearForm AffineChart::pull_back(const LinearForm& form) const {
  return {chart_coefficients(*this, form.normal), form.offset - dot(form.normal, origin)};
}

Flat Flat::ambient(int n) { return Flat(n, {}); }

bool Flat::contains(const Vector& x) const {
  check_width(x, ambient_dim_, "point");
  return std::all_of(equations_.begin(), equations_.end(),
                     [&](const LinearForm& f) { return f.evaluate(x) == 0; });
}

bool Flat::inside(const LinearForm& hyperplane) const {
  check_width(hyperplane.normal, ambient_dim_, "hyperplane");
  // The hyperplane contains the flat iff its augmented row lies in the row
  // space of the canonical equations; reduce against the pivots.
  Vector row = hyperplane.normal;
  row.push_back(hyperplane.offset);
  int r = 0;
  for (const auto& eq : equations_) {
    while (eq.normal[r] == 0) ++r;
    if (row[r] != 0) {
      Rational f = row[r];
      for (int j = 0; j < ambient_dim_; ++j) row[j] -= f * eq.normal[j];
      row[ambient_dim_] -= f * eq.offset;
    }
    ++r;
  }
  return is_zero(row);
}

bool Flat::subset_of(const Flat& other) const {
  return std::all_of(other.equations_.begin(), other.equations_.end(),
                     [&](const LinearForm& f) { return inside(f); });
}

AffineChart Flat::chart() const {
  AffineChart chart;
  chart.origin.assign(ambient_dim_, Rational(0));
  std::vector<int> pivot_of_col(ambient_dim_, -1);
  for (std::size_t r = 0; r < equations_.size(); ++r) {
    int p = 0;
    while (equations_[r].normal[p] == 0) ++p;
    pivot_of_col[p] = static_cast<int>(r);
    chart.origin[p] = equations_[r].offset;
  }
  for (int f = 0; f < ambient_dim_; ++f) {
    if (pivot_of_col[f] != -1) continue;
    Vector dir(ambient_dim_);
    dir[f] = 1;
    for (int p = 0; p < ambient_dim_; ++p) {
      if (pivot_of_col[p] != -1) dir[p] = -equations_[pivot_of_col[p]].normal[f];
    }
    chart.directions.push_back(std::move(dir));
  }
  return chart;
}

bool operator<(const Flat& a, const Flat& b) {
  if (a.ambient_dim_ != b.ambient_dim_) return a.ambient_dim_ < b.ambient_dim_;
  if (a.equations_.size() != b.equations_.size()) return a.equations_.size() < b.equations_.size();
  return a.equations_ < b.equations_;
}

std::optional<Flat> flat_from_hyperplanes(std::span<const LinearForm> hyperplanes, int ambient_dim) {
  std::vector<Vector> rows;
  rows.reserve(hyperplanes.size());
  for (const auto& h : hyperplanes) {
    check_width(h.normal, ambient_dim, "hyperplane normal");
    Vector row = h.normal;
    row.push_back(h.offset);
    rows.push_back(std::move(row));
  }
  Echelon e = reduce(std::move(rows), ambient_dim);
  if (!e.consistent) return std::nullopt;
  std::vector<LinearForm> eqs;
  eqs.reserve(e.rows.size());
  for (auto& row : e.rows) {
    Rational off = row.back();
    row.pop_back();
    eqs.push_back({std::move(row), std::move(off)});
  }
  return Flat(ambient_dim, std::move(eqs));
}

std::optional<Vector> strict_interior_point(const PolyhedronDescr& p) {
  check_polyhedron(p);
  auto flat = flat_from_hyperplanes(p.equalities, p.ambient_dim);
  if (!flat) return std::nullopt;
  AffineChart chart = flat->chart();

  struct Row {
    Vector g;
    Rational h;
    bool strict;
  };
  std::vector<Row> rows;
  auto add = [&](const LinearForm& f, bool strict) {
    LinearForm local = chart.pull_back(f);
    if (is_zero(local.normal)) {
      // Constant on the flat: 0 (>|>=) offset must already hold.
      return strict ? local.offset < 0 : local.offset <= 0;
    }
    rows.push_back({std::move(local.normal), std::move(local.offset), strict});
    return true;
  };
  for (const auto& f : p.weak_inequalities) {
    if (!add(f, false)) return std::nullopt;
  }
  bool any_strict = false;
  for (const auto& f : p.strict_inequalities) {
    if (!add(f, true)) return std::nullopt;
  }
  for (const auto& r : rows) any_strict = any_strict || r.strict;
  if (rows.empty()) return chart.origin;

  // Variables: z⁺, z⁻ (k each), then the common slack s when anything is strict.
  // Maximize s subject to g·z - s·[strict] >= h and s <= 1.
  const int k = chart.dim();
  std::vector<Vector> a;
  Vector b;
  for (const auto& r : rows) {
    Vector row;
    append_split(row, r.g, -1);
    if (any_strict) row.push_back(r.strict ? Rational(1) : Rational(0));
    a.push_back(std::move(row));
    b.push_back(-r.h);
  }
  Vector objective(2 * k + (any_strict ? 1 : 0));
  if (any_strict) {
    Vector cap(2 * k + 1);
    cap.back() = 1;
    a.push_back(std::move(cap));
    b.push_back(1);
    objective.back() = 1;
  }
  lp::Result res = lp::maximize(a, b, objective);
  if (res.status != lp::Status::optimal) return std::nullopt;
  if (any_strict && res.value <= 0) return std::nullopt;
  Vector z(k);
  for (int i = 0; i < k; ++i) z[i] = res.x[i] - res.x[k + i];
  return chart.point_at(z);
}

int cone_span_dim(std::span<const Vector> equalities, std::span<const Vector> inequalities, int ambient_dim) {
  std::vector<LinearForm> eqs;
  for (const auto& v : equalities) {
    check_width(v, ambient_dim, "cone equality");
    eqs.push_back({v, Rational(0)});
  }
  // Linear equations are always consistent.
  AffineChart chart = flat_from_hyperplanes(eqs, ambient_dim)->chart();
  const int k = chart.dim();

  std::vector<Vector> g;
  for (const auto& v : inequalities) {
    check_width(v, ambient_dim, "cone inequality");
    Vector local = chart_coefficients(chart, v);
    if (!is_zero(local)) g.push_back(std::move(local));
  }
  if (g.empty()) return k;

  // Maximize sum s_i with g_i·z >= s_i, 0 <= s_i <= 1. Every inequality that is
  // not an implicit equality reaches s_i = 1 at the optimum (sum the
  // individual certificates and scale), the implicit ones stay at 0.
  const int r = static_cast<int>(g.size());
  std::vector<Vector> a;
  Vector b;
  for (int i = 0; i < r; ++i) {
    Vector row;
    append_split(row, g[i], -1);
    row.resize(2 * k + r);
    row[2 * k + i] = 1;
    a.push_back(std::move(row));
    b.push_back(0);
    Vector cap(2 * k + r);
    cap[2 * k + i] = 1;
    a.push_back(std::move(cap));
    b.push_back(1);
  }
  Vector objective(2 * k + r);
  for (int i = 0; i < r; ++i) objective[2 * k + i] = 1;
  lp::Result res = lp::maximize(a, b, objective);
  if (res.status != lp::Status::optimal) throw StructureViolation("cone LP not optimal");

  std::vector<Vector> implicit;
  for (int i = 0; i < r; ++i) {
    if (res.x[2 * k + i] == 0) implicit.push_back(g[i]);
  }
  return k - rank(implicit);
}

int recession_span_dim(const PolyhedronDescr& p) {
  check_polyhedron(p);
  if (!p.strict_inequalities.empty()) {
    throw InvalidArgument("recession_span_dim expects a closure (no strict inequalities)");
  }
  std::vector<Vector> eq, ineq;
  for (const auto& f : p.equalities) eq.push_back(f.normal);
  for (const auto& f : p.weak_inequalities) ineq.push_back(f.normal);
  return cone_span_dim(eq, ineq, p.ambient_dim);
}

bool bounded_within(const PolyhedronDescr& p, std::span<const Vector> basis) {
  check_polyhedron(p);
  for (const auto& v : basis) check_width(v, p.ambient_dim, "subspace basis vector");
  if (rank(basis) != static_cast<int>(basis.size())) {
    throw InvalidArgument("subspace basis is not linearly independent");
  }
  if (basis.empty()) return true;
  auto coords = [&](const Vector& normal) {
    Vector c(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) c[k] = dot(normal, basis[k]);
    return c;
  };
  std::vector<Vector> eq, ineq;
  for (const auto& f : p.equalities) eq.push_back(coords(f.normal));
  for (const auto& f : p.weak_inequalities) ineq.push_back(coords(f.normal));
  for (const auto& f : p.strict_inequalities) ineq.push_back(coords(f.normal));
  return cone_span_dim(eq, ineq, static_cast<int>(basis.size())) == 0;
}

int rank(std::span<const Vector> vectors) { return static_cast<int>(row_space_basis(vectors).size()); }

std::vector<Vector> row_space_basis(std::span<const Vector> vectors) {
  if (vectors.empty()) return {};
  const int cols = static_cast<int>(vectors.front().size());
  std::vector<Vector> rows(vectors.begin(), vectors.end());
  for (const auto& r : rows) check_width(r, cols, "row");
  return reduce(std::move(rows), cols).rows;
}

}  // namespace arrcomb
