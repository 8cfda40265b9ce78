#include "arrcomb/error.hpp"
#include "arrcomb/faces.hpp"
#include "arrcomb/poset.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace arrcomb;
using testing::poly;
using testing::vec;

TEST_SUITE("poset") {
  TEST_CASE("flats of Shi A_2") {
    FlatList f = intersection_flats(build_family(Family::shi, 2));
    REQUIRE(f.flats.size() == 3);
    CHECK(f.flats[0] == Flat::ambient(2));
    CHECK(f.flats[1].dim() == 1);
    CHECK(f.flats[2].dim() == 1);
    CHECK(f.containing[1].contains(0) != f.containing[2].contains(0));
  }

  TEST_CASE("flats are sorted by decreasing dimension") {
    FlatList f = intersection_flats(build_family(Family::catalan, 3));
    for (std::size_t i = 1; i < f.flats.size(); ++i) CHECK(f.flats[i - 1].dim() >= f.flats[i].dim());
  }

  TEST_CASE("Möbius function on Shi A_2") {
    IntersectionPoset p = build_intersection_poset(build_family(Family::shi, 2));
    CHECK(p.mobius(0, 0) == 1);
    CHECK(p.mobius(0, 1) == -1);
    CHECK(p.mobius(0, 2) == -1);
    CHECK(p.mobius(1, 2) == 0);
    CHECK(p.leq(0, 1));
    CHECK_FALSE(p.leq(1, 0));
    CHECK_FALSE(p.leq(1, 2));
  }

  TEST_CASE("Möbius rows sum to zero on every nontrivial interval") {
    for (auto fam : {Family::shi, Family::catalan, Family::linial}) {
      IntersectionPoset p = build_intersection_poset(build_family(fam, 3));
      for (std::size_t x = 0; x < p.size(); ++x) {
        for (std::size_t y = 0; y < p.size(); ++y) {
          if (x == y || !p.leq(x, y)) continue;
          Integer sum = 0;
          for (std::size_t z = 0; z < p.size(); ++z) {
            if (p.leq(x, z) && p.leq(z, y)) sum += p.mobius(x, z);
          }
          CHECK(sum == 0);
        }
      }
    }
  }

  TEST_CASE("characteristic and Whitney polynomials") {
    CHECK(characteristic_polynomial(build_family(Family::shi, 2)) == poly({{1, 0, 2}, {-2, 0, 1}}));
    CHECK(whitney_polynomial(build_family(Family::shi, 2)) == poly({{1, 0, 2}, {-2, 0, 1}, {2, 1, 1}}));
    CHECK(whitney_polynomial(build_family(Family::braid, 2)) == poly({{1, 0, 2}, {-1, 0, 1}, {1, 1, 1}}));
    CHECK(whitney_polynomial(build_family(Family::braid, 3)) ==
          poly({{1, 0, 3}, {-3, 0, 2}, {3, 1, 2}, {2, 0, 1}, {-3, 1, 1}, {1, 2, 1}}));
    // Empty arrangement in R^1.
    CHECK(whitney_polynomial(Arrangement::generic(1, {})) == poly({{1, 0, 1}}));
    // Type B, n = 1, axis offset 0: w = t - 1 + x.
    TypeBSpec b;
    b.n = 1;
    b.axis_offsets[0] = {0};
    CHECK(whitney_polynomial(build_type_b(b)) == poly({{1, 0, 1}, {-1, 0, 0}, {1, 1, 0}}));
  }

  TEST_CASE("Whitney polynomials match point counts over finite fields") {
    for (auto fam : {Family::braid, Family::shi, Family::catalan, Family::semiorder, Family::linial}) {
      for (int n = 1; n <= 3; ++n) {
        for (int a : {1, 2}) {
          auto spec = family_spec(fam, n, a);
          INFO(family_name(fam), " n=", n, " a=", a);
          CHECK(whitney_polynomial(build_deformed_braid(spec)) ==
                oracle::whitney_by_point_counts(testing::int_arrangement(spec)));
        }
      }
    }
  }

  TEST_CASE("frozen Whitney polynomials at n = 4") {
    // From the finite-field oracle.
    CHECK(whitney_polynomial(build_family(Family::shi, 4)) ==
          poly({{1, 0, 4}, {-12, 0, 3}, {12, 1, 3}, {48, 0, 2}, {-84, 1, 2}, {36, 2, 2}, {-64, 0, 1},
                {148, 1, 1}, {-108, 2, 1}, {24, 3, 1}}));
    CHECK(whitney_polynomial(build_family(Family::linial, 4)) ==
          poly({{1, 0, 4}, {-6, 0, 3}, {6, 1, 3}, {15, 0, 2}, {-30, 1, 2}, {15, 2, 2}, {-14, 0, 1},
                {40, 1, 1}, {-36, 2, 1}, {10, 3, 1}}));
  }

  TEST_CASE("type B Whitney polynomials match point counts") {
    TypeBSpec b;
    b.n = 2;
    b.diff_offsets[{0, 1}] = {-1, 1};
    b.sum_offsets[{0, 1}] = {0};
    b.axis_offsets[0] = {0, 2};
    b.axis_offsets[1] = {-1};
    CHECK(whitney_polynomial(build_type_b(b)) == oracle::whitney_by_point_counts(testing::int_arrangement(b)));
  }

  TEST_CASE("second Whitney route agrees") {
    for (auto fam : {Family::shi, Family::catalan, Family::semiorder}) {
      Arrangement a = build_family(fam, 3, 2);
      CHECK(whitney_by_restrictions(a) == whitney_polynomial(a));
    }
  }

  TEST_CASE("face count from the Whitney polynomial") {
    // Σ_X r(A/X) = (-1)^n w(-1, -1).
    for (auto fam : {Family::shi, Family::catalan, Family::linial}) {
      Arrangement a = build_family(fam, 3);
      Rational w = whitney_polynomial(a).evaluate(-1, -1);
      CHECK(-w == static_cast<long>(enumerate_faces(a).size()));
    }
  }

  TEST_CASE("serial and parallel Möbius tables agree") {
    Arrangement a = build_family(Family::catalan, 4);
    IntersectionPoset s = build_intersection_poset(a, Execution::serial);
    IntersectionPoset p = build_intersection_poset(a, Execution::parallel);
    REQUIRE(s.size() == p.size());
    for (std::size_t x = 0; x < s.size(); ++x) CHECK(s.upper_interval(x) == p.upper_interval(x));
  }
}
