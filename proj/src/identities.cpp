#include "arrcomb/identities.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "arrcomb/error.hpp"

namespace arrcomb {

namespace {

std::string str(const Integer& v) { return v.get_str(); }
std::string str(std::int64_t v) { return std::to_string(v); }

template <typename T>
std::string join(const std::vector<T>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += str(items[i]);
  }
  return out + "]";
}

std::string series_string(const TruncatedSeries& s) {
  std::string out = "[";
  for (int n = 0; n <= s.truncation(); ++n) {
    if (n) out += "; ";
    out += s[n].to_string();
  }
  return out + "]";
}

CheckResult make(std::string check, std::string instance, bool pass, std::string lhs, std::string rhs,
                 std::string note = {}) {
  return {std::move(check), std::move(instance), pass, std::move(lhs), std::move(rhs), std::move(note)};
}

const DeformedBraidSpec& require_braid(const Analysis& a, const char* what) {
  const DeformedBraidSpec* spec = a.arrangement.deformed_braid();
  if (!spec) throw InvalidArgument(std::string(what) + " needs a deformed braid arrangement");
  return *spec;
}

std::vector<FaceCountTable> tables_of(const std::vector<Analysis>& members, std::size_t count) {
  std::vector<FaceCountTable> out;
  for (std::size_t k = 0; k < count; ++k) {
    if (members[k].table.n != static_cast<int>(k) + 1) {
      throw InvalidArgument("sequence member " + std::to_string(k + 1) + " has the wrong dimension");
    }
    out.push_back(members[k].table);
  }
  return out;
}

bool uniform(const DeformedBraidSpec& spec) {
  const std::vector<Rational>* first = nullptr;
  for (const auto& [key, list] : spec.offsets) {
    if (!first) first = &list;
    else if (list != *first) return false;
  }
  return true;
}

// Faces of induced sub-arrangements, computed once per distinct spec.
class SubCatalog {
 public:
  struct Entry {
    Arrangement arrangement;
    std::vector<Face> faces;
    std::vector<std::vector<const Face*>> level_one;  // by dimension
  };

  explicit SubCatalog(const DeformedBraidSpec& spec) : spec_(spec) {}

  const Entry& get(const std::vector<int>& block) {
    DeformedBraidSpec sub = induced_subarrangement(spec_, block);
    std::string key = describe(sub);
    auto it = entries_.find(key);
    if (it != entries_.end()) return it->second;
    Arrangement a = build_deformed_braid(sub);
    Entry e{a, enumerate_faces(a, Execution::serial), {}};
    auto [pos, inserted] = entries_.emplace(key, std::move(e));
    Entry& stored = pos->second;
    stored.level_one.assign(sub.n + 1, {});
    for (const Face& f : stored.faces) {
      if (f.level == 1) stored.level_one[f.dim].push_back(&f);
    }
    return stored;
  }

 private:
  DeformedBraidSpec spec_;
  std::map<std::string, Entry> entries_;
};

}  // namespace

std::string family_label(Family family, int n, int a) {
  std::string out(family_name(family));
  if (family != Family::braid && family != Family::linial) out += " a=" + std::to_string(a);
  return out + " n=" + std::to_string(n);
}

Analysis analyze(const Arrangement& a, std::string label, Execution exec) {
  return analyze(a, std::move(label), enumerate_faces(a, exec), exec);
}

Analysis analyze(const Arrangement& a, std::string label, std::vector<Face> faces, Execution exec) {
  FaceCountTable table = count_table(a, faces, exec);
  IntersectionPoset poset = build_intersection_poset(a, exec);
  BivariatePolynomial w = whitney_polynomial(poset);
  BivariatePolynomial chi = characteristic_polynomial(poset);
  return Analysis{std::move(label), a, std::move(faces), std::move(table), std::move(poset), std::move(w),
                  std::move(chi)};
}

CheckResult check_zaslavsky(const Analysis& a) {
  const int n = a.arrangement.ambient_dim();
  Integer chi_m1 = abs(a.chi.evaluate(0, -1).get_num());
  Integer chi_p1 = abs(a.chi.evaluate(0, 1).get_num());
  std::vector<Integer> lhs{a.table.r, a.table.b[n]};
  std::vector<Integer> rhs{chi_m1, chi_p1};
  return make("zaslavsky", a.label, lhs == rhs, "r=" + str(lhs[0]) + ", b=" + str(lhs[1]),
              "|chi(-1)|=" + str(rhs[0]) + ", |chi(1)|=" + str(rhs[1]));
}

std::vector<CheckResult> check_stirling(const Analysis& a) {
  const int n = a.table.n;
  std::vector<CheckResult> out;
  for (int l = 1; l <= n; ++l) {
    Integer sum = 0;
    for (int d = l; d <= n; ++d) sum += ((d - l) % 2 ? -1 : 1) * Integer(a.table.at(d, l));
    Integer rhs = factorial(l) * stirling2(n, l);
    out.push_back(make("stirling", a.label + " l=" + std::to_string(l), sum == rhs, str(sum), str(rhs),
                       "alternating sum over d at fixed n"));
  }
  return out;
}

std::vector<CheckResult> check_expansion(const Analysis& a, ExpansionBasis basis) {
  const bool type_b = basis == ExpansionBasis::type_b;
  const ArrangementKind want = type_b ? ArrangementKind::type_b : ArrangementKind::deformed_braid;
  if (a.arrangement.kind() != want) {
    throw InvalidArgument(std::string("expansion basis ") + (type_b ? "typeB" : "typeA") +
                          " does not match arrangement kind " + std::string(kind_name(a.arrangement.kind())));
  }
  const int n = a.table.n;
  const BinomShift shift = type_b ? BinomShift::half : BinomShift::none;
  BivariatePolynomial rhs, rhs_x0;
  for (int d = 0; d <= n; ++d) {
    for (int l = type_b ? 0 : 1; l <= d; ++l) {
      std::int64_t f = a.table.at(d, l);
      if (f == 0) continue;
      Rational c = Rational(((d - l) % 2 ? -1 : 1) * f);
      BivariatePolynomial term = BivariatePolynomial::monomial(c, n - d, 0) * binom_poly(l, shift);
      rhs += term;
      if (d == n) rhs_x0 += term;
    }
  }
  return {make("expansion", a.label, a.whitney == rhs, a.whitney.to_string(), rhs.to_string()),
          make("expansion_x0", a.label, a.chi == rhs_x0 && a.whitney.at_x_zero() == rhs.at_x_zero(),
               a.chi.to_string(), rhs_x0.to_string())};
}

Integer power_identity_rhs(const std::vector<FaceCountTable>& tables, int n, int d, int l) {
  if (n > static_cast<int>(tables.size())) throw InvalidArgument("count tables stop before n=" + std::to_string(n));
  // ways(m, e, k): ordered choices of k parts with sizes summing to m and
  // dimensions summing to e, weighted by Π f_{d_i,1}(A_{n_i}) and the
  // multinomial coefficient built one binomial at a time.
  std::map<std::tuple<int, int, int>, Integer> memo;
  std::function<Integer(int, int, int)> ways = [&](int m, int e, int k) -> Integer {
    if (k == 0) return (m == 0 && e == 0) ? Integer(1) : Integer(0);
    if (m < k || e < k) return 0;
    auto key = std::make_tuple(m, e, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    for (int m1 = 1; m1 <= m - (k - 1); ++m1) {
      const FaceCountTable& t = tables[m1 - 1];
      for (int e1 = 1; e1 <= std::min(m1, e - (k - 1)); ++e1) {
        std::int64_t f = t.at(e1, 1);
        if (f == 0) continue;
        total += binomial(m, m1) * f * ways(m - m1, e - e1, k - 1);
      }
    }
    memo[key] = total;
    return total;
  };
  return ways(n, d, l);
}

std::vector<CheckResult> check_power_identity(const std::vector<Analysis>& members) {
  const int N = static_cast<int>(members.size());
  if (N == 0) throw InvalidArgument("power identity needs at least one table");
  std::vector<FaceCountTable> tables = tables_of(members, N);
  std::vector<CheckResult> out;
  for (int n = 1; n <= N; ++n) {
    for (int l = 1; l <= n; ++l) {
      std::vector<Integer> lhs, rhs;
      for (int d = l; d <= n; ++d) {
        lhs.push_back(tables[n - 1].at(d, l));
        rhs.push_back(power_identity_rhs(tables, n, d, l));
      }
      out.push_back(make("power", members[n - 1].label + " l=" + std::to_string(l), lhs == rhs, join(lhs),
                         join(rhs), "f_{d,l} for d = l..n"));
    }
  }
  TruncatedSeries f1 = egf_truncated(tables, 1);
  for (int l = 1; l <= N; ++l) {
    TruncatedSeries lhs = egf_truncated(tables, l);
    TruncatedSeries rhs = f1.power(l);
    out.push_back(make("power_series", members[0].label.substr(0, members[0].label.rfind(" n=")) +
                                           " N=" + std::to_string(N) + " l=" + std::to_string(l),
                       lhs == rhs, series_string(lhs), series_string(rhs)));
  }
  return out;
}

std::vector<CheckResult> check_stanley(const std::vector<Analysis>& members) {
  const int N = static_cast<int>(members.size());
  if (N == 0) throw InvalidArgument("Whitney series needs at least one member");
  std::vector<FaceCountTable> tables = tables_of(members, N);
  const std::string label =
      members[0].label.substr(0, members[0].label.rfind(" n=")) + " N=" + std::to_string(N);

  TruncatedSeries w = TruncatedSeries::one(N);
  TruncatedSeries chi = TruncatedSeries::one(N);
  TruncatedSeries signed_regions(N);
  for (int n = 1; n <= N; ++n) {
    w[n] = members[n - 1].whitney;
    chi[n] = members[n - 1].chi;
    signed_regions[n] = BivariatePolynomial::constant(Rational((n % 2 ? -1 : 1) * tables[n - 1].r));
  }
  TruncatedSeries f1 = egf_truncated(tables, 1);
  TruncatedSeries f_all(N);
  for (int l = 1; l <= N; ++l) f_all += egf_truncated(tables, l);

  TruncatedSeries via_f1 = binomial_power(-f1.negate_xy());
  TruncatedSeries via_f = binomial_power(f_all.negate_xy(), -BivariatePolynomial::t());
  TruncatedSeries regions = binomial_power(signed_regions, -BivariatePolynomial::t());
  return {make("stanley", label, w == via_f1, series_string(w), series_string(via_f1)),
          make("stanley_inverse", label, w == via_f, series_string(w), series_string(via_f)),
          make("stanley_x0", label, chi == regions && w.at_x_zero() == chi, series_string(chi),
               series_string(regions))};
}

std::vector<CheckResult> check_convolution(const Analysis& a) {
  const DeformedBraidSpec& spec = require_braid(a, "convolution check");
  const int n = spec.n;
  Arrangement central = centralize(a.arrangement);
  FlatList flats = intersection_flats(central);

  std::vector<std::vector<Integer>> sum(n + 1, std::vector<Integer>(n + 1, 0));
  std::vector<Integer> counted, expected;
  bool regions_ok = true;
  for (const Flat& x : flats.flats) {
    const int l = x.dim();
    Restriction res = restrict_to_flat(central, x);
    Integer r = static_cast<long>(enumerate_regions(res.arrangement).size());
    counted.push_back(r);
    expected.push_back(factorial(l));
    if (r != expected.back()) regions_ok = false;
    FaceCountTable loc = count_table(localize(a.arrangement, x));
    for (int d = l; d <= n; ++d) sum[d][l] += r * loc.b[d];
  }
  std::vector<CheckResult> out;
  out.push_back(make("convolution_regions", a.label, regions_ok, join(counted), join(expected),
                     "regions of the centralization restricted to each flat vs (dim X)!"));
  for (int d = 1; d <= n; ++d) {
    for (int l = 1; l <= d; ++l) {
      Integer f = a.table.at(d, l);
      out.push_back(make("convolution", a.label + " d=" + std::to_string(d) + " l=" + std::to_string(l),
                         f == sum[d][l], str(f), str(sum[d][l])));
    }
  }
  return out;
}

CheckResult check_levels(const Analysis& a) {
  const DeformedBraidSpec& spec = require_braid(a, "level check");
  const Rational bound = (spec.n - 1) * spec.max_abs_offset();
  std::size_t level_mismatch = 0, spread_violations = 0;
  std::vector<std::int64_t> by_recession(a.table.n + 1, 0), by_components(a.table.n + 1, 0);
  for (const Face& f : a.faces) {
    FaceDigraph g = order_components(face_digraph(spec, f.witness));
    const int comps = static_cast<int>(g.components.size());
    ++by_recession[f.level];
    ++by_components[comps];
    if (comps != f.level) ++level_mismatch;
    for (const auto& block : g.components) {
      auto [lo, hi] = std::minmax_element(block.begin(), block.end(),
                                          [&](int i, int j) { return f.witness[i] < f.witness[j]; });
      if (f.witness[*hi] - f.witness[*lo] > bound) ++spread_violations;
    }
  }
  std::string note = "faces by level; " + std::to_string(spread_violations) +
                     " components wider than (n-1)*max|offset|";
  return make("levels", a.label, level_mismatch == 0 && spread_violations == 0, join(by_recession),
              join(by_components), note);
}

CheckResult check_relatively_bounded(const Analysis& a) {
  const int n = a.table.n;
  std::vector<std::int64_t> level_one(n + 1, 0), bounded(n + 1, 0);
  std::size_t disagreements = 0;
  bool no_level_zero = true;
  for (const Face& f : a.faces) {
    const bool rb = relatively_bounded(a.arrangement, f);
    if (f.level == 1) ++level_one[f.dim];
    if (rb) ++bounded[f.dim];
    if ((f.level == 1) != rb) ++disagreements;
  }
  for (int d = 0; d <= n; ++d) {
    if (a.table.at(d, 0) != 0) no_level_zero = false;
  }
  return make("eq6", a.label, disagreements == 0 && no_level_zero && bounded == a.table.b, join(level_one),
              join(bounded), "level-1 vs relatively bounded faces by dimension");
}

CheckResult check_whitney_routes(const Analysis& a) {
  BivariatePolynomial other = whitney_by_restrictions(a.arrangement);
  return make("whitney", a.label, a.whitney == other, a.whitney.to_string(), other.to_string(),
              "Mobius table vs sum over restrictions");
}

std::vector<CheckResult> check_bijection(const Analysis& a, const std::vector<FaceCountTable>* family_tables) {
  const DeformedBraidSpec& spec = require_braid(a, "bijection check");
  const int n = spec.n;
  SubCatalog catalog(spec);
  std::string note = uniform(spec) ? "" : "non-uniform offsets; outcome reported, not covered by the theorem";

  // Forward direction over every face.
  std::size_t forward_ok = 0, parts_ok = 0;
  std::vector<std::vector<std::int64_t>> image_count(n + 1, std::vector<std::int64_t>(n + 1, 0));
  std::set<std::pair<OrderedPartition, std::vector<std::string>>> images;
  for (const Face& f : a.faces) {
    PhiImage im;
    try {
      im = phi(spec, f);
    } catch (const StructureViolation&) {
      continue;
    }
    int dims = 0;
    bool level_one = true;
    std::vector<std::string> signs;
    for (const Face& p : im.parts) {
      dims += p.dim;
      signs.push_back(p.sign);
      if (level_by_recession(build_deformed_braid(induced_subarrangement(spec, im.partition.blocks[signs.size() - 1])),
                             p) != 1) {
        level_one = false;
      }
    }
    const int l = static_cast<int>(im.partition.blocks.size());
    if (level_one && dims == f.dim && l == f.level) ++parts_ok;
    ++image_count[f.dim][l];
    Face back = phi_inverse(spec, im.partition, im.parts);
    if (back.sign == f.sign) ++forward_ok;
    images.emplace(im.partition, std::move(signs));
  }

  // Inverse direction over every (partition, level-1 tuple), and the counts
  // Σ_π Σ Π f_{d_i,1}(A_{π_i}) per (d, l).
  std::size_t tuples = 0, inverse_ok = 0;
  std::vector<std::vector<Integer>> partition_sum(n + 1, std::vector<Integer>(n + 1, 0));
  for (int l = 1; l <= n; ++l) {
    for (const OrderedPartition& pi : ordered_partitions(n, l)) {
      std::vector<const SubCatalog::Entry*> entries;
      for (const auto& block : pi.blocks) entries.push_back(&catalog.get(block));
      std::vector<Face> parts(l);
      std::function<void(int, int)> walk = [&](int p, int dims) {
        if (p == l) {
          ++tuples;
          ++partition_sum[dims][l];
          Face f = phi_inverse(spec, pi, parts);
          PhiImage im = phi(spec, f);
          bool same = im.partition == pi && f.dim == dims;
          for (int q = 0; same && q < l; ++q) same = im.parts[q].sign == parts[q].sign;
          if (same) ++inverse_ok;
          return;
        }
        for (const auto& by_dim : entries[p]->level_one) {
          for (const Face* face : by_dim) {
            parts[p] = *face;
            walk(p + 1, dims + face->dim);
          }
        }
      };
      walk(0, 0);
    }
  }

  const std::string faces = std::to_string(a.faces.size());
  std::vector<CheckResult> out;
  out.push_back(make("bijection_forward", a.label, forward_ok == a.faces.size(), faces,
                     std::to_string(forward_ok), "faces vs phi_inverse(phi(F)) = F; " + note));
  out.push_back(make("bijection_parts", a.label, parts_ok == a.faces.size(), faces, std::to_string(parts_ok),
                     "faces vs images with level-1 parts, l = level, dim(F) = sum dim(F_p)"));
  out.push_back(make("bijection_injective", a.label, images.size() == a.faces.size(), faces,
                     std::to_string(images.size()), "faces vs distinct images"));
  out.push_back(make("bijection_inverse", a.label, inverse_ok == tuples, std::to_string(tuples),
                     std::to_string(inverse_ok), "tuples vs phi(phi_inverse(pi, parts)) = (pi, parts); " + note));

  std::vector<std::string> lhs, rhs, rhs_family;
  bool counts_ok = true;
  for (int d = 1; d <= n; ++d) {
    for (int l = 1; l <= d; ++l) {
      const std::string at = "(" + std::to_string(d) + "," + std::to_string(l) + ")=";
      Integer img = image_count[d][l];
      lhs.push_back(at + str(img));
      rhs.push_back(at + str(partition_sum[d][l]));
      if (img != partition_sum[d][l] || img != Integer(a.table.at(d, l))) counts_ok = false;
      if (family_tables) {
        Integer fam = power_identity_rhs(*family_tables, n, d, l);
        rhs_family.push_back(at + str(fam));
        if (img != fam) counts_ok = false;
      }
    }
  }
  auto flat = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : " ") + e;
    return s;
  };
  std::string count_note = "image counts vs sum over ordered partitions";
  if (family_tables) count_note += "; power-identity side: " + flat(rhs_family);
  out.push_back(make("bijection_counts", a.label, counts_ok, flat(lhs), flat(rhs), count_note));
  return out;
}

std::set<std::string> parse_check_list(const std::string& csv) {
  const auto& known = all_check_names();
  std::set<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    item = item.substr(b, item.find_last_not_of(" \t") - b + 1);
    if (std::find(known.begin(), known.end(), item) == known.end()) {
      throw InvalidArgument("unknown check '" + item + "'");
    }
    out.insert(item);
  }
  if (out.empty()) out.insert(known.begin(), known.end());
  return out;
}

namespace {

void append(std::vector<CheckResult>& out, std::vector<CheckResult> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

void single_arrangement_checks(const Analysis& a, const std::set<std::string>& checks,
                               const std::vector<FaceCountTable>* family_tables, std::vector<CheckResult>& out) {
  if (checks.count("zaslavsky")) out.push_back(check_zaslavsky(a));
  if (checks.count("levels")) out.push_back(check_levels(a));
  if (checks.count("eq6")) out.push_back(check_relatively_bounded(a));
  if (checks.count("stirling")) append(out, check_stirling(a));
  if (checks.count("expansion")) append(out, check_expansion(a, ExpansionBasis::type_a));
  if (checks.count("whitney")) out.push_back(check_whitney_routes(a));
  if (checks.count("convolution")) append(out, check_convolution(a));
  if (checks.count("bijection")) append(out, check_bijection(a, family_tables));
}

}  // namespace

std::vector<CheckResult> run_family_suite(const FamilySuiteOptions& options) {
  if (options.n_max < 1) throw InvalidArgument("--n-max must be at least 1");
  std::vector<Analysis> members;
  for (int n = 1; n <= options.n_max; ++n) {
    members.push_back(analyze(build_family(options.family, n, options.a),
                              family_label(options.family, n, options.a), options.exec));
  }
  return run_family_suite(options, members);
}

std::vector<CheckResult> run_family_suite(const FamilySuiteOptions& options, const std::vector<Analysis>& members) {
  if (options.truncation < 1) throw InvalidArgument("truncation order must be at least 1");
  const std::set<std::string> checks = options.checks.empty() ? parse_check_list("") : options.checks;
  std::vector<FaceCountTable> tables = tables_of(members, members.size());
  std::vector<CheckResult> out;
  for (const Analysis& a : members) single_arrangement_checks(a, checks, &tables, out);
  const std::size_t N = std::min<std::size_t>(options.truncation, members.size());
  std::vector<Analysis> head(members.begin(), members.begin() + N);
  if (checks.count("power")) append(out, check_power_identity(head));
  if (checks.count("stanley")) append(out, check_stanley(head));
  return out;
}

namespace {

std::vector<Rational> random_list(std::mt19937_64& rng, int lo, int hi, int max_len) {
  std::vector<int> pool;
  for (int v = lo; v <= hi; ++v) pool.push_back(v);
  const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min<int>(max_len, pool.size())));
  for (int k = 0; k < len; ++k) {
    std::size_t pick = k + rng() % (pool.size() - k);
    std::swap(pool[k], pool[pick]);
  }
  std::vector<int> chosen(pool.begin(), pool.begin() + len);
  std::sort(chosen.begin(), chosen.end());
  return {chosen.begin(), chosen.end()};
}

}  // namespace

DeformedBraidSpec random_deformed_braid(std::mt19937_64& rng, int n, int lo, int hi, int max_len) {
  if (lo > hi || max_len < 1) throw InvalidArgument("empty offset range");
  DeformedBraidSpec spec;
  spec.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) spec.offsets[{i, j}] = random_list(rng, lo, hi, max_len);
  }
  return spec;
}

TypeBSpec random_type_b(std::mt19937_64& rng, int n, int lo, int hi, int max_len) {
  if (lo > hi || max_len < 1) throw InvalidArgument("empty offset range");
  TypeBSpec spec;
  spec.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      spec.diff_offsets[{i, j}] = random_list(rng, lo, hi, max_len);
      spec.sum_offsets[{i, j}] = random_list(rng, lo, hi, max_len);
    }
  }
  for (int i = 0; i < n; ++i) spec.axis_offsets[i] = random_list(rng, lo, hi, max_len);
  return spec;
}

std::vector<CheckResult> run_random_suite(const RandomSuiteOptions& options) {
  if (options.count < 0) throw InvalidArgument("--random must be nonnegative");
  if (options.n_max < 2) throw InvalidArgument("--n-max must be at least 2 for random specs");
  std::set<std::string> checks = options.checks.empty() ? parse_check_list("") : options.checks;
  checks.erase("power");
  checks.erase("stanley");
  std::mt19937_64 rng(options.seed);
  std::vector<CheckResult> out;
  for (int k = 0; k < options.count; ++k) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(options.n_max - 1));
    DeformedBraidSpec spec = random_deformed_braid(rng, n);
    Analysis a = analyze(build_deformed_braid(spec), "random#" + std::to_string(k + 1) + " " + describe(spec),
                         options.exec);
    single_arrangement_checks(a, checks, nullptr, out);
  }
  return out;
}

namespace {

std::string list_string(const std::vector<Rational>& list) {
  std::string s = "[";
  for (std::size_t i = 0; i < list.size(); ++i) s += (i ? "," : "") + format_rational(list[i]);
  return s + "]";
}

std::string pairs_string(const PairOffsets& offsets) {
  std::string s;
  for (const auto& [key, list] : offsets) {
    if (!s.empty()) s += " ";
    s += std::to_string(key.first + 1) + "," + std::to_string(key.second + 1) + ":" + list_string(list);
  }
  return "{" + s + "}";
}

}  // namespace

std::string describe(const DeformedBraidSpec& spec) {
  return "n=" + std::to_string(spec.n) + " " + pairs_string(spec.offsets);
}

std::string describe(const TypeBSpec& spec) {
  std::string axis;
  for (const auto& [i, list] : spec.axis_offsets) {
    if (!axis.empty()) axis += " ";
    axis += std::to_string(i + 1) + ":" + list_string(list);
  }
  return "n=" + std::to_string(spec.n) + " diff" + pairs_string(spec.diff_offsets) + " sum" +
         pairs_string(spec.sum_offsets) + " axis{" + axis + "}";
}

}  // namespace arrcomb
