#include "doctest.h"

#include <random>
#include <set>

#include "arrcomb/bijection.hpp"
#include "arrcomb/error.hpp"
#include "arrcomb/identities.hpp"
#include "arrcomb/series.hpp"
#include "helpers.hpp"

using namespace arrcomb;
using testing::vec;

namespace {

using Blocks = std::vector<std::vector<int>>;

Face singleton_part() {
  DeformedBraidSpec one;
  one.n = 1;
  auto faces = enumerate_faces(build_deformed_braid(one));
  REQUIRE(faces.size() == 1);
  return faces[0];
}

void check_round_trips(const DeformedBraidSpec& spec) {
  Arrangement a = build_deformed_braid(spec);
  auto faces = enumerate_faces(a);
  std::set<std::pair<OrderedPartition, std::vector<std::string>>> images;
  for (const auto& f : faces) {
    PhiImage img = phi(spec, f);
    img.partition.validate(spec.n);
    CHECK(img.partition.blocks.size() == static_cast<std::size_t>(f.level));
    int dims = 0;
    std::vector<std::string> part_signs;
    for (const auto& p : img.parts) {
      CHECK(p.level == 1);
      dims += p.dim;
      part_signs.push_back(p.sign);
    }
    CHECK(dims == f.dim);
    CHECK(images.insert({img.partition, part_signs}).second);
    Face back = phi_inverse(spec, img.partition, img.parts);
    CHECK(back.sign == f.sign);
    CHECK(back.dim == f.dim);
    CHECK(back.level == f.level);
  }
}

}  // namespace

TEST_SUITE("bijection") {
  TEST_CASE("ordered partitions") {
    CHECK(ordered_partitions(3, 1).size() == 1);
    for (int n = 1; n <= 5; ++n) {
      for (int l = 1; l <= n; ++l) {
        auto ps = ordered_partitions(n, l);
        CHECK(Integer(ps.size()) == factorial(l) * stirling2(n, l));
        std::set<OrderedPartition> distinct(ps.begin(), ps.end());
        CHECK(distinct.size() == ps.size());
        for (const auto& p : ps) p.validate(n);
      }
    }
    const std::vector<OrderedPartition> two{{Blocks{{0}, {1}}}, {Blocks{{1}, {0}}}};
    CHECK(ordered_partitions(2, 2) == two);
  }

  TEST_CASE("partition validation") {
    const OrderedPartition good{Blocks{{1}, {0, 2}}};
    CHECK_NOTHROW(good.validate(3));
    const std::vector<std::pair<Blocks, int>> bad{
        {Blocks{{0}, {0, 1}}, 2}, {Blocks{{0}}, 2}, {Blocks{{0}, {}}, 1}, {Blocks{{1, 0}}, 2}, {Blocks{{0, 2}}, 2}};
    for (const auto& [blocks, n] : bad) {
      const OrderedPartition p{blocks};
      CHECK_THROWS_AS(p.validate(n), InvalidArgument);
    }
  }

  TEST_CASE("Shi A_2 region far above the strip") {
    DeformedBraidSpec spec = family_spec(Family::shi, 2);
    Arrangement a = build_deformed_braid(spec);
    Face f = locate_face(a, vec({5, 0}));
    CHECK(f.sign == "++");
    PhiImage img = phi(spec, f);
    CHECK((img.partition.blocks == Blocks{{0}, {1}}));
    REQUIRE(img.parts.size() == 2);
    CHECK(img.parts[0].dim == 1);
    CHECK(img.parts[1].dim == 1);

    Face back = phi_inverse(spec, OrderedPartition{Blocks{{0}, {1}}}, {singleton_part(), singleton_part()});
    CHECK(back.sign == "++");
    Face other = phi_inverse(spec, OrderedPartition{Blocks{{1}, {0}}}, {singleton_part(), singleton_part()});
    CHECK(other.sign == "--");
  }

  TEST_CASE("Catalan A_2 region below the lowest line") {
    DeformedBraidSpec spec = family_spec(Family::catalan, 2);
    Arrangement a = build_deformed_braid(spec);
    PhiImage img = phi(spec, locate_face(a, vec({0, 5})));
    CHECK((img.partition.blocks == Blocks{{1}, {0}}));
  }

  TEST_CASE("level one faces map to a single block") {
    DeformedBraidSpec spec = family_spec(Family::shi, 3);
    for (const auto& f : enumerate_faces(build_deformed_braid(spec))) {
      if (f.level != 1) continue;
      PhiImage img = phi(spec, f);
      CHECK((img.partition.blocks == Blocks{{0, 1, 2}}));
      CHECK(img.parts[0].sign == f.sign);
    }
  }

  TEST_CASE("inverse rejects bad input") {
    DeformedBraidSpec spec = family_spec(Family::shi, 2);
    Face one = singleton_part();
    CHECK_THROWS_AS((phi_inverse(spec, OrderedPartition{Blocks{{0}}}, {one})), InvalidArgument);
    CHECK_THROWS_AS((phi_inverse(spec, OrderedPartition{Blocks{{0}, {1}}}, {one})), InvalidArgument);
    // A level-2 face of Shi A_2 cannot be a part.
    Arrangement a = build_deformed_braid(spec);
    Face level2 = locate_face(a, vec({5, 0}));
    REQUIRE(level2.level == 2);
    CHECK_THROWS_AS((phi_inverse(spec, OrderedPartition{Blocks{{0, 1}}}, {level2})), InvalidArgument);
    // A face of a different arrangement.
    Face braid_line = locate_face(build_family(Family::braid, 2), vec({0, 0}));
    CHECK_THROWS_AS((phi_inverse(spec, OrderedPartition{Blocks{{0, 1}}}, {braid_line})), InvalidArgument);
  }

  TEST_CASE("round trips on family members") {
    for (Family fam : {Family::braid, Family::shi, Family::catalan, Family::semiorder, Family::linial}) {
      for (int n = 1; n <= 3; ++n) {
        INFO(family_label(fam, n, 1));
        check_round_trips(family_spec(fam, n));
      }
    }
    check_round_trips(family_spec(Family::shi, 3, 2));
  }

  TEST_CASE("round trips on random non-uniform specs") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
      DeformedBraidSpec spec = random_deformed_braid(rng, 2 + i % 2);
      INFO(describe(spec));
      check_round_trips(spec);
    }
  }
}
