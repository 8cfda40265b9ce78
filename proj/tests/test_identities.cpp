#include "doctest.h"

#include <random>

#include "arrcomb/error.hpp"
#include "arrcomb/identities.hpp"
#include "helpers.hpp"

using namespace arrcomb;
using testing::poly;

namespace {

void require_all_pass(const std::vector<CheckResult>& results) {
  REQUIRE_FALSE(results.empty());
  for (const auto& r : results) {
    INFO(r.check, " [", r.instance, "] ", r.lhs, " vs ", r.rhs);
    CHECK(r.pass);
  }
}

std::vector<Analysis> members(Family fam, int n_max, int a = 1) {
  std::vector<Analysis> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(analyze(build_family(fam, n, a), family_label(fam, n, a)));
  return out;
}

std::size_t count_named(const std::vector<CheckResult>& rs, const std::string& name) {
  std::size_t k = 0;
  for (const auto& r : rs) k += r.check == name;
  return k;
}

}  // namespace

TEST_SUITE("identities") {
  TEST_CASE("region and bounded counts from the characteristic polynomial") {
    Analysis shi = analyze(build_family(Family::shi, 2), "shi");
    CHECK(shi.chi == poly({{1, 0, 2}, {-2, 0, 1}}));
    CHECK(shi.table.r == 3);
    CHECK(shi.table.b[2] == 1);
    CHECK(check_zaslavsky(shi).pass);

    Analysis braid = analyze(build_family(Family::braid, 3), "braid");
    CHECK(braid.table.r == 6);
    CHECK(braid.table.b[3] == 0);
    CHECK(check_zaslavsky(braid).pass);

    Analysis empty = analyze(Arrangement::generic(1, {}), "empty");
    CHECK(empty.chi == BivariatePolynomial::t());
    CHECK(empty.table.r == 1);
    CHECK(check_zaslavsky(empty).pass);
  }

  TEST_CASE("alternating sums of level counts") {
    Analysis shi = analyze(build_family(Family::shi, 2), "shi");
    auto rs = check_stirling(shi);
    REQUIRE(rs.size() == 2);
    require_all_pass(rs);
    // l = 1: f(1,1) - f(2,1) = 2 - 1 = 1! S(2,1); l = 2: f(2,2) = 2 = 2! S(2,2).
    CHECK(shi.table.at(1, 1) - shi.table.at(2, 1) == 1);
    CHECK(shi.table.at(2, 2) == 2);
    require_all_pass(check_stirling(analyze(build_family(Family::catalan, 2), "catalan")));
    require_all_pass(check_stirling(analyze(build_family(Family::semiorder, 3, 2), "semiorder")));
  }

  TEST_CASE("binomial expansion of the Whitney polynomial") {
    Analysis shi = analyze(build_family(Family::shi, 2), "shi");
    auto rs = check_expansion(shi, ExpansionBasis::type_a);
    CHECK(count_named(rs, "expansion") == 1);
    CHECK(count_named(rs, "expansion_x0") == 1);
    require_all_pass(rs);
    require_all_pass(check_expansion(analyze(build_family(Family::braid, 1), "braid"), ExpansionBasis::type_a));
    require_all_pass(check_expansion(analyze(build_family(Family::linial, 3), "linial"), ExpansionBasis::type_a));

    TypeBSpec b;
    b.n = 1;
    b.axis_offsets[0] = {Rational(0)};
    Analysis tb = analyze(build_type_b(b), "b1");
    CHECK(tb.whitney == poly({{1, 0, 1}, {-1, 0, 0}, {1, 1, 0}}));
    require_all_pass(check_expansion(tb, ExpansionBasis::type_b));

    CHECK_THROWS_AS(check_expansion(shi, ExpansionBasis::type_b), InvalidArgument);
    CHECK_THROWS_AS(check_expansion(tb, ExpansionBasis::type_a), InvalidArgument);
  }

  TEST_CASE("type B expansion on random specs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 12; ++i) {
      TypeBSpec spec = random_type_b(rng, 1 + i % 3);
      INFO(describe(spec));
      require_all_pass(check_expansion(analyze(build_type_b(spec), describe(spec)), ExpansionBasis::type_b));
    }
  }

  TEST_CASE("compositional right-hand side") {
    auto ms = members(Family::shi, 3);
    std::vector<FaceCountTable> tables;
    for (const auto& m : ms) tables.push_back(m.table);
    CHECK(power_identity_rhs(tables, 2, 2, 2) == 2);
    CHECK(power_identity_rhs(tables, 2, 2, 2) == ms[1].table.at(2, 2));
    for (int n = 1; n <= 3; ++n) {
      for (int l = 1; l <= n; ++l) {
        for (int d = l; d <= n; ++d) CHECK(power_identity_rhs(tables, n, d, l) == ms[n - 1].table.at(d, l));
      }
    }
    // Braid: f_{1,1} = 1 for every n, so f(d,l) counts ordered partitions into l blocks at d = l.
    std::vector<FaceCountTable> bt;
    for (const auto& m : members(Family::braid, 3)) bt.push_back(m.table);
    CHECK(power_identity_rhs(bt, 3, 3, 3) == 6);
    CHECK(power_identity_rhs(bt, 3, 2, 2) == 6);
    CHECK(power_identity_rhs(bt, 3, 3, 2) == 0);
    require_all_pass(check_power_identity(ms));
    CHECK(count_named(check_power_identity(ms), "power_series") == 3);
  }

  TEST_CASE("Whitney generating function") {
    auto braid = members(Family::braid, 4);
    auto rs = check_stanley(braid);
    CHECK(count_named(rs, "stanley") == 1);
    CHECK(count_named(rs, "stanley_inverse") == 1);
    CHECK(count_named(rs, "stanley_x0") == 1);
    require_all_pass(rs);
    require_all_pass(check_stanley(members(Family::shi, 4)));
    require_all_pass(check_stanley(members(Family::linial, 3)));
  }

  TEST_CASE("convolution over the centralization") {
    Analysis shi = analyze(build_family(Family::shi, 2), "shi");
    auto rs = check_convolution(shi);
    CHECK(count_named(rs, "convolution_regions") >= 1);
    CHECK(count_named(rs, "convolution") >= 3);
    require_all_pass(rs);
    require_all_pass(check_convolution(analyze(build_family(Family::catalan, 3), "catalan")));
    TypeBSpec b;
    b.n = 1;
    b.axis_offsets[0] = {Rational(0)};
    CHECK_THROWS_AS(check_convolution(analyze(build_type_b(b), "b")), InvalidArgument);
  }

  TEST_CASE("levels, relative boundedness and Whitney routes") {
    for (Family fam : {Family::shi, Family::catalan, Family::semiorder, Family::linial}) {
      for (int n = 1; n <= 3; ++n) {
        Analysis an = analyze(build_family(fam, n), family_label(fam, n, 1));
        INFO(an.label);
        CHECK(check_levels(an).pass);
        CHECK(check_relatively_bounded(an).pass);
        CHECK(check_whitney_routes(an).pass);
      }
    }
  }

  TEST_CASE("bijection report") {
    auto ms = members(Family::shi, 3);
    std::vector<FaceCountTable> tables;
    for (const auto& m : ms) tables.push_back(m.table);
    auto rs = check_bijection(ms[2], &tables);
    for (const char* name : {"bijection_forward", "bijection_parts", "bijection_injective", "bijection_inverse",
                             "bijection_counts"}) {
      CHECK(count_named(rs, name) >= 1);
    }
    require_all_pass(rs);
  }

  TEST_CASE("check lists") {
    CHECK(parse_check_list("") == std::set<std::string>(all_check_names().begin(), all_check_names().end()));
    CHECK(parse_check_list("stirling,power") == std::set<std::string>{"stirling", "power"});
    CHECK(parse_check_list(" zaslavsky , eq6 ") == std::set<std::string>{"zaslavsky", "eq6"});
    CHECK_THROWS_AS(parse_check_list("stirling,nope"), InvalidArgument);
  }

  TEST_CASE("family suite") {
    FamilySuiteOptions o;
    o.family = Family::catalan;
    o.n_max = 3;
    auto rs = run_family_suite(o);
    require_all_pass(rs);
    for (const auto& name : all_check_names()) {
      bool seen = false;
      for (const auto& r : rs) seen = seen || r.check.rfind(name, 0) == 0;
      CHECK_MESSAGE(seen, name);
    }
    o.checks = {"stirling"};
    for (const auto& r : run_family_suite(o)) CHECK(r.check == "stirling");
  }

  TEST_CASE("random suite is deterministic and passes") {
    RandomSuiteOptions o;
    o.count = 8;
    o.seed = 5;
    auto first = run_random_suite(o);
    require_all_pass(first);
    auto second = run_random_suite(o);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
      CHECK(first[i].instance == second[i].instance);
      CHECK(first[i].lhs == second[i].lhs);
    }
    for (const auto& r : first) CHECK((r.check != "power" && r.check != "stanley"));
  }
}
