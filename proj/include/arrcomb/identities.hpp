#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "arrcomb/arrangement.hpp"
#include "arrcomb/bijection.hpp"
#include "arrcomb/faces.hpp"
#include "arrcomb/poset.hpp"
#include "arrcomb/series.hpp"

namespace arrcomb {

/// Everything the checks need about one arrangement, computed once.
struct Analysis {
  std::string label;
  Arrangement arrangement;
  std::vector<Face> faces;
  FaceCountTable table;
  IntersectionPoset poset;
  BivariatePolynomial whitney;
  BivariatePolynomial chi;
};

Analysis analyze(const Arrangement& a, std::string label, Execution exec = Execution::parallel);
/// Reuses an existing face list (for example one loaded from the cache).
Analysis analyze(const Arrangement& a, std::string label, std::vector<Face> faces,
                 Execution exec = Execution::parallel);

/// One verified identity: both sides verbatim so failures are diagnosable.
struct CheckResult {
  std::string check;
  std::string instance;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  std::string note;
};

/// r = |χ(-1)| and b_n = |χ(1)|.
CheckResult check_zaslavsky(const Analysis& a);

/// Σ_{d=l}^{n} (-1)^{d-l} f(d,l) = l! S(n,l) for each l in [1, n]; the sum
/// runs over d at fixed n.
std::vector<CheckResult> check_stirling(const Analysis& a);

enum class ExpansionBasis { type_a, type_b };

/// w(A) equals the f(d,l)-weighted binomial expansion, plus its x = 0 slice
/// against χ. Throws InvalidArgument when the basis does not match the kind.
std::vector<CheckResult> check_expansion(const Analysis& a, ExpansionBasis basis);

/// Σ over compositions n_1+..+n_l = n, d_1+..+d_l = d (n_i >= d_i >= 1) of
/// multinomial(n; n_i) Π f_{d_i,1}(A_{n_i}). tables[k-1] belongs to A_k.
Integer power_identity_rhs(const std::vector<FaceCountTable>& tables, int n, int d, int l);

/// members[k-1] is A_k of one sequence. Coefficient form for every (n, l) and
/// series form F_l = F_1^l.
std::vector<CheckResult> check_power_identity(const std::vector<Analysis>& members);

/// 1 + Σ w(A_n) y^n/n! = (1 - F_1(-x,-y))^t = (1 + F(-x,-y))^{-t}, and the
/// x = 0 slice against the region-count formula.
std::vector<CheckResult> check_stanley(const std::vector<Analysis>& members);

/// f_{d,l} = Σ_{X in L(centralization), dim X = l} r(centralization/X) b_d(A_X),
/// with r(centralization/X) cross-checked against (dim X)!. Deformed braid only.
std::vector<CheckResult> check_convolution(const Analysis& a);

/// Level by recession equals the strong-component count on every face, and
/// same-component witness coordinates lie within (n-1)·max|offset|.
CheckResult check_levels(const Analysis& a);

/// Level-1 faces are exactly the relatively bounded ones in each dimension,
/// and f(d,0) = 0.
CheckResult check_relatively_bounded(const Analysis& a);

/// The Möbius-table Whitney polynomial equals Σ_X x^{n-dim X} χ(A/X, t).
CheckResult check_whitney_routes(const Analysis& a);

/// Round trips in both directions, injectivity, level-1 parts, dimension
/// additivity, and image counts per (d,l). When family_tables is given the
/// counts are also compared with power_identity_rhs.
std::vector<CheckResult> check_bijection(const Analysis& a, const std::vector<FaceCountTable>* family_tables = nullptr);

// ---- suites ---------------------------------------------------------------

inline const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names{"zaslavsky", "levels",  "eq6",         "stirling",
                                              "expansion", "whitney", "convolution", "power",
                                              "stanley",   "bijection"};
  return names;
}

/// Throws InvalidArgument for unknown names. Empty input selects everything.
std::set<std::string> parse_check_list(const std::string& csv);

struct FamilySuiteOptions {
  Family family = Family::braid;
  int n_max = 3;
  int a = 1;
  int truncation = 4;
  std::set<std::string> checks;
  Execution exec = Execution::parallel;
};

/// Runs the selected checks on A_1..A_{n_max}; series checks use
/// N = min(truncation, n_max).
std::vector<CheckResult> run_family_suite(const FamilySuiteOptions& options);
std::vector<CheckResult> run_family_suite(const FamilySuiteOptions& options, const std::vector<Analysis>& members);

/// Offsets drawn from [lo, hi] (integers), list lengths in [1, max_len].
DeformedBraidSpec random_deformed_braid(std::mt19937_64& rng, int n, int lo = -2, int hi = 2, int max_len = 3);
TypeBSpec random_type_b(std::mt19937_64& rng, int n, int lo = -2, int hi = 2, int max_len = 2);

struct RandomSuiteOptions {
  int count = 20;
  int n_max = 3;
  std::uint64_t seed = 1;
  std::set<std::string> checks;
  Execution exec = Execution::parallel;
};

/// Single-arrangement checks on random deformed braid specs with n in
/// [2, n_max]. Bijection outcomes on non-uniform specs are reported, with a
/// note that the bijection theorem is stated for uniform sequences.
std::vector<CheckResult> run_random_suite(const RandomSuiteOptions& options);

/// "shi a=2 n=3"; the parameter is omitted for braid and Linial.
std::string family_label(Family family, int n, int a);
std::string describe(const DeformedBraidSpec& spec);
std::string describe(const TypeBSpec& spec);

}  // namespace arrcomb
