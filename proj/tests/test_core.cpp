#include "arrcomb/error.hpp"
#include "arrcomb/exactgeom.hpp"
#include "arrcomb/lp.hpp"
#include "arrcomb/rational.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace arrcomb;
using testing::q;
using testing::vec;

TEST_SUITE("rational") {
  TEST_CASE("parse and format round trip") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(format_rational(parse_rational("3/6")) == "1/2");
    CHECK(format_rational(parse_rational("-4/2")) == "-2");
    CHECK(format_rational(parse_rational("0/5")) == "0");
    CHECK(format_rational(parse_rational("7")) == "7");
    CHECK_THROWS_AS(parse_rational("2/-4"), ParseError);
  }

  TEST_CASE("malformed rationals are rejected") {
    for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "1//2", " 1", "--1", "+"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_rational(bad), ParseError);
    }
  }

  TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 4) == 0);
  }
}

TEST_SUITE("lp") {
  TEST_CASE("bounded optimum") {
    // max x + y  s.t. x + 2y <= 4, 3x + y <= 6
    auto r = lp::maximize({vec({1, 2}), vec({3, 1})}, vec({4, 6}), vec({1, 1}));
    REQUIRE(r.status == lp::Status::optimal);
    CHECK(r.value == Rational(14, 5));
    CHECK(r.x == Vector{Rational(8, 5), Rational(6, 5)});
  }

  TEST_CASE("infeasible and unbounded") {
    CHECK(lp::maximize({vec({1}), vec({-1})}, vec({1, -2}), vec({1})).status == lp::Status::infeasible);
    CHECK(lp::maximize({vec({1, -1})}, vec({1}), vec({1, 0})).status == lp::Status::unbounded);
  }

  TEST_CASE("negative right-hand side needs phase one") {
    // x >= 2 written as -x <= -2; max -x gives -2.
    auto r = lp::maximize({vec({-1})}, vec({-2}), vec({-1}));
    REQUIRE(r.status == lp::Status::optimal);
    CHECK(r.value == -2);
  }

  TEST_CASE("degenerate vertex terminates") {
    auto r = lp::maximize({vec({1, 1}), vec({1, -1}), vec({-1, 1}), vec({1, 0})}, vec({0, 0, 0, 0}), vec({1, 1}));
    REQUIRE(r.status == lp::Status::optimal);
    CHECK(r.value == 0);
  }
}

TEST_SUITE("exactgeom") {
  TEST_CASE("flats are canonical") {
    std::vector<LinearForm> a{{vec({2, -2, 0}), 2}, {vec({0, 1, -1}), 0}};
    std::vector<LinearForm> b{{vec({1, 0, -1}), 1}, {vec({3, -3, 0}), 3}};
    auto fa = flat_from_hyperplanes(a, 3);
    auto fb = flat_from_hyperplanes(b, 3);
    REQUIRE(fa);
    REQUIRE(fb);
    CHECK(*fa == *fb);
    CHECK(fa->dim() == 1);
    CHECK(fa->contains(vec({1, 0, 0})));
    CHECK_FALSE(fa->contains(vec({0, 0, 0})));
  }

  TEST_CASE("empty intersections and dimension mismatch") {
    std::vector<LinearForm> parallel{{vec({1, -1}), 0}, {vec({1, -1}), 1}};
    CHECK_FALSE(flat_from_hyperplanes(parallel, 2).has_value());
    std::vector<LinearForm> wrong{{vec({1, -1, 0}), 0}};
    CHECK_THROWS_AS(flat_from_hyperplanes(wrong, 2), DimensionMismatch);
  }

  TEST_CASE("chart parametrizes the flat") {
    std::vector<LinearForm> eq{{vec({1, -1, 0}), 1}};
    auto f = flat_from_hyperplanes(eq, 3);
    REQUIRE(f);
    AffineChart c = f->chart();
    CHECK(c.dim() == 2);
    for (const auto& z : {vec({0, 0}), vec({3, -1}), vec({-2, 5})}) CHECK(f->contains(c.point_at(z)));
    LinearForm h{vec({0, 1, -1}), 2};
    LinearForm pulled = c.pull_back(h);
    Vector z = vec({4, 7});
    CHECK(pulled.evaluate(z) == h.evaluate(c.point_at(z)));
  }

  TEST_CASE("subset and inside") {
    auto line = flat_from_hyperplanes(std::vector<LinearForm>{{vec({1, -1, 0}), 0}, {vec({0, 1, -1}), 0}}, 3);
    auto plane = flat_from_hyperplanes(std::vector<LinearForm>{{vec({1, 0, -1}), 0}}, 3);
    REQUIRE(line);
    REQUIRE(plane);
    CHECK(line->subset_of(*plane));
    CHECK_FALSE(plane->subset_of(*line));
    CHECK(line->inside({vec({2, 0, -2}), 0}));
    CHECK_FALSE(line->inside({vec({1, 0, -1}), 1}));
    CHECK(line->subset_of(Flat::ambient(3)));
  }

  TEST_CASE("strict interior points") {
    PolyhedronDescr p{2, {}, {{vec({1, 0}), 0}, {vec({0, 1}), 0}, {vec({-1, -1}), -1}}, {}};
    auto x = strict_interior_point(p);
    REQUIRE(x);
    CHECK((*x)[0] > 0);
    CHECK((*x)[1] > 0);
    CHECK((*x)[0] + (*x)[1] < 1);

    PolyhedronDescr empty{1, {}, {{vec({1}), 0}, {vec({-1}), 0}}, {}};
    CHECK_FALSE(strict_interior_point(empty).has_value());

    PolyhedronDescr on_line{2, {{vec({1, -1}), 1}}, {{vec({1, 0}), 5}}, {}};
    auto y = strict_interior_point(on_line);
    REQUIRE(y);
    CHECK((*y)[0] - (*y)[1] == 1);
    CHECK((*y)[0] > 5);
  }

  TEST_CASE("recession span and boundedness") {
    // Triangle: bounded.
    PolyhedronDescr tri{2, {}, {}, {{vec({1, 0}), 0}, {vec({0, 1}), 0}, {vec({-1, -1}), -1}}};
    CHECK(recession_span_dim(tri) == 0);
    // Strip 0 <= x - y <= 1: recession cone is the line (1,1).
    PolyhedronDescr strip{2, {}, {}, {{vec({1, -1}), 0}, {vec({-1, 1}), -1}}};
    CHECK(recession_span_dim(strip) == 1);
    std::vector<Vector> w{vec({1, -1})};
    CHECK(bounded_within(strip, w));
    std::vector<Vector> diag{vec({1, 1})};
    CHECK_FALSE(bounded_within(strip, diag));
    // Quadrant: cone spans the plane.
    PolyhedronDescr quad{2, {}, {}, {{vec({1, 0}), 0}, {vec({0, 1}), 0}}};
    CHECK(recession_span_dim(quad) == 2);
    PolyhedronDescr strict{1, {}, {{vec({1}), 0}}, {}};
    CHECK_THROWS_AS(recession_span_dim(strict), InvalidArgument);
  }

  TEST_CASE("cone span dimension sees implicit equalities") {
    // y1 >= 0, -y1 >= 0 forces y1 = 0; y2 free.
    std::vector<Vector> ineq{vec({1, 0}), vec({-1, 0})};
    CHECK(cone_span_dim({}, ineq, 2) == 1);
    std::vector<Vector> half{vec({1, 0})};
    CHECK(cone_span_dim({}, half, 2) == 2);
  }

  TEST_CASE("rank and row space") {
    std::vector<Vector> rows{vec({1, -1, 0}), vec({0, 1, -1}), vec({1, 0, -1})};
    CHECK(rank(rows) == 2);
    CHECK(row_space_basis(rows).size() == 2);
  }
}
