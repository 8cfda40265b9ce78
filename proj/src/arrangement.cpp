#include "arrcomb/arrangement.hpp"

#include <algorithm>
#include <set>

#include "arrcomb/error.hpp"

namespace arrcomb {

namespace {

std::string pair_label(int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

void check_offsets(const std::vector<Rational>& list, const std::string& where) {
  if (list.empty()) throw InvalidSpec("empty offset list at " + where);
  for (std::size_t k = 1; k < list.size(); ++k) {
    if (!(list[k - 1] < list[k])) throw InvalidSpec("offsets not strictly increasing at " + where);
  }
}

void check_pairs(const PairOffsets& table, int n, const std::string& name) {
  for (const auto& [key, list] : table) {
    auto [i, j] = key;
    if (i < 0 || j >= n || i >= j) throw InvalidSpec(name + " has invalid pair " + pair_label(i, j));
    check_offsets(list, name + " " + pair_label(i, j));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!table.count({i, j})) throw InvalidSpec(name + " is missing pair " + pair_label(i, j));
    }
  }
}

Vector unit_combo(int n, int i, int coef_i, int j, int coef_j) {
  Vector v(n);
  v[i] = coef_i;
  if (j >= 0) v[j] = coef_j;
  return v;
}

}  // namespace

Canonicalized canonicalize(const LinearForm& form) {
  if (is_zero(form.normal)) throw InvalidArgument("hyperplane normal is zero");
  Integer lcm_den = 1;
  for (const auto& c : form.normal) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  for (const auto& c : form.normal) {
    Integer num = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  Rational factor(lcm_den, g);
  factor.canonicalize();
  auto first = std::find_if(form.normal.begin(), form.normal.end(), [](const Rational& c) { return c != 0; });
  int orientation = 1;
  if (*first < 0) {
    factor = -factor;
    orientation = -1;
  }
  Canonicalized out{{form.normal, form.offset * factor}, orientation};
  for (auto& c : out.hyperplane.normal) c *= factor;
  return out;
}

Rational DeformedBraidSpec::max_abs_offset() const {
  Rational best = 0;
  for (const auto& [key, list] : offsets) {
    for (const auto& a : list) best = std::max(best, Rational(abs(a)));
  }
  return best;
}

void DeformedBraidSpec::validate() const {
  if (n < 1) throw InvalidSpec("deformed braid spec needs n >= 1");
  check_pairs(offsets, n, "offsets");
}

void TypeBSpec::validate() const {
  if (n < 1) throw InvalidSpec("type B spec needs n >= 1");
  check_pairs(diff_offsets, n, "diff_offsets");
  check_pairs(sum_offsets, n, "sum_offsets");
  for (const auto& [i, list] : axis_offsets) {
    if (i < 0 || i >= n) throw InvalidSpec("axis_offsets has invalid index " + std::to_string(i + 1));
    check_offsets(list, "axis_offsets " + std::to_string(i + 1));
  }
  for (int i = 0; i < n; ++i) {
    if (!axis_offsets.count(i)) throw InvalidSpec("axis_offsets is missing index " + std::to_string(i + 1));
  }
}

std::string_view kind_name(ArrangementKind kind) {
  switch (kind) {
    case ArrangementKind::generic: return "generic";
    case ArrangementKind::deformed_braid: return "deformed_braid";
    case ArrangementKind::type_b: return "type_b";
  }
  return "generic";
}

Arrangement::Arrangement(int n, std::vector<Hyperplane> hyperplanes, ArrangementSpec spec)
    : ambient_dim_(n), hyperplanes_(std::move(hyperplanes)), spec_(std::move(spec)) {
  std::vector<Vector> normals;
  normals.reserve(hyperplanes_.size());
  for (const auto& h : hyperplanes_) normals.push_back(h.normal);
  normal_span_basis_ = row_space_basis(normals);
}

Arrangement Arrangement::generic(int ambient_dim, const std::vector<LinearForm>& hyperplanes) {
  if (ambient_dim < 0) throw InvalidArgument("negative ambient dimension");
  std::vector<Hyperplane> out;
  std::set<Hyperplane> seen;
  for (const auto& h : hyperplanes) {
    if (static_cast<int>(h.normal.size()) != ambient_dim) {
      throw DimensionMismatch("hyperplane normal length " + std::to_string(h.normal.size()) +
                              " in ambient dimension " + std::to_string(ambient_dim));
    }
    Hyperplane c = canonicalize(h).hyperplane;
    if (seen.insert(c).second) out.push_back(std::move(c));
  }
  return Arrangement(ambient_dim, std::move(out), GenericSpec{});
}

Arrangement build_deformed_braid(const DeformedBraidSpec& spec) {
  spec.validate();
  std::vector<Hyperplane> hs;
  for (const auto& [key, list] : spec.offsets) {
    for (const auto& a : list) hs.push_back({unit_combo(spec.n, key.first, 1, key.second, -1), a});
  }
  return Arrangement(spec.n, std::move(hs), spec);
}

Arrangement build_type_b(const TypeBSpec& spec) {
  spec.validate();
  std::vector<Hyperplane> hs;
  for (const auto& [key, list] : spec.diff_offsets) {
    for (const auto& a : list) hs.push_back({unit_combo(spec.n, key.first, 1, key.second, -1), a});
  }
  for (const auto& [key, list] : spec.sum_offsets) {
    for (const auto& b : list) hs.push_back({unit_combo(spec.n, key.first, 1, key.second, 1), b});
  }
  for (const auto& [i, list] : spec.axis_offsets) {
    for (const auto& c : list) hs.push_back({unit_combo(spec.n, i, 1, -1, 0), c});
  }
  return Arrangement(spec.n, std::move(hs), spec);
}

Family parse_family(std::string_view name) {
  if (name == "braid") return Family::braid;
  if (name == "shi") return Family::shi;
  if (name == "catalan") return Family::catalan;
  if (name == "semiorder") return Family::semiorder;
  if (name == "linial") return Family::linial;
  throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::braid: return "braid";
    case Family::shi: return "shi";
    case Family::catalan: return "catalan";
    case Family::semiorder: return "semiorder";
    case Family::linial: return "linial";
  }
  return "braid";
}

DeformedBraidSpec family_spec(Family family, int n, int a) {
  if (n < 1) throw InvalidArgument("family size n must be >= 1");
  if (a < 1) throw InvalidArgument("extension parameter a must be >= 1");
  std::vector<Rational> list;
  switch (family) {
    case Family::braid: list = {0}; break;
    case Family::linial: list = {1}; break;
    case Family::shi:
      for (int k = -a + 1; k <= a; ++k) list.emplace_back(k);
      break;
    case Family::catalan:
      for (int k = -a; k <= a; ++k) list.emplace_back(k);
      break;
    case Family::semiorder:
      for (int k = -a; k <= a; ++k) {
        if (k != 0) list.emplace_back(k);
      }
      break;
  }
  DeformedBraidSpec spec;
  spec.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) spec.offsets[{i, j}] = list;
  }
  return spec;
}

Arrangement build_family(Family family, int n, int a) { return build_deformed_braid(family_spec(family, n, a)); }

bool is_flat_of(const Arrangement& a, const Flat& x) {
  if (x.ambient_dim() != a.ambient_dim()) return false;
  std::vector<LinearForm> containing;
  for (const auto& h : a.hyperplanes()) {
    if (x.inside(h)) containing.push_back(h);
  }
  auto closure = flat_from_hyperplanes(containing, a.ambient_dim());
  return closure && *closure == x;
}

Restriction restrict_to_flat(const Arrangement& a, const Flat& x) {
  if (!is_flat_of(a, x)) throw NotAFlat("flat is not an intersection of hyperplanes of the arrangement");
  AffineChart chart = x.chart();
  std::vector<int> image(a.size());
  std::vector<int> orientation(a.size());
  std::vector<Hyperplane> traces;
  std::map<Hyperplane, int> index;
  for (std::size_t h = 0; h < a.size(); ++h) {
    LinearForm local = chart.pull_back(a.hyperplanes()[h]);
    if (is_zero(local.normal)) {
      // parent(x) = -local.offset everywhere on X
      if (local.offset == 0) {
        image[h] = Restriction::kContains;
        orientation[h] = 0;
      } else {
        image[h] = Restriction::kDisjoint;
        orientation[h] = local.offset < 0 ? 1 : -1;
      }
      continue;
    }
    Canonicalized c = canonicalize(local);
    auto [it, inserted] = index.emplace(c.hyperplane, static_cast<int>(traces.size()));
    if (inserted) traces.push_back(c.hyperplane);
    image[h] = it->second;
    orientation[h] = c.orientation;
  }
  Arrangement restricted = Arrangement::generic(chart.dim(), traces);
  return {x, std::move(chart), std::move(restricted), std::move(image), std::move(orientation)};
}

Arrangement centralize(const Arrangement& a) {
  if (const auto* db = a.deformed_braid()) {
    DeformedBraidSpec braid = *db;
    for (auto& [key, list] : braid.offsets) list = {Rational(0)};
    return build_deformed_braid(braid);
  }
  if (const auto* tb = a.type_b()) {
    TypeBSpec coxeter = *tb;
    for (auto& [key, list] : coxeter.diff_offsets) list = {Rational(0)};
    for (auto& [key, list] : coxeter.sum_offsets) list = {Rational(0)};
    for (auto& [key, list] : coxeter.axis_offsets) list = {Rational(0)};
    return build_type_b(coxeter);
  }
  std::vector<LinearForm> linear;
  for (const auto& h : a.hyperplanes()) linear.push_back({h.normal, Rational(0)});
  return Arrangement::generic(a.ambient_dim(), linear);
}

Arrangement localize(const Arrangement& a, const Flat& v) {
  if (!is_flat_of(centralize(a), v)) throw NotAFlat("subspace is not a flat of the centralization");
  AffineChart chart = v.chart();
  std::vector<LinearForm> kept;
  for (const auto& h : a.hyperplanes()) {
    bool parallel = std::all_of(chart.directions.begin(), chart.directions.end(),
                                [&](const Vector& d) { return dot(h.normal, d) == 0; });
    if (parallel) kept.push_back(h);
  }
  return Arrangement::generic(a.ambient_dim(), kept);
}

DeformedBraidSpec induced_subarrangement(const DeformedBraidSpec& spec, const std::vector<int>& subset) {
  if (subset.empty()) throw InvalidArgument("induced sub-arrangement needs a nonempty subset");
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (subset[k] < 0 || subset[k] >= spec.n) throw InvalidArgument("subset element out of range");
    if (k > 0 && subset[k - 1] >= subset[k]) throw InvalidArgument("subset must be strictly increasing");
  }
  DeformedBraidSpec out;
  out.n = static_cast<int>(subset.size());
  for (int i = 0; i < out.n; ++i) {
    for (int j = i + 1; j < out.n; ++j) out.offsets[{i, j}] = spec.at(subset[i], subset[j]);
  }
  return out;
}

}  // namespace arrcomb
