#include <doctest.h>

#include "maxips/constructions.hpp"
#include "maxips/extension.hpp"

#include <algorithm>
#include <cmath>

using namespace maxips;

namespace {

const char* kSemiCrab =
    "0,0;0,-168;-40,30;64,-48;-88,66;112,-84;144,-108;180,-135;-196,147;"
    "224,-168;-288,216;320,-240;504,-378;-560,420;640,-480;-920,690;1584,-1188;"
    "-2176,1632;2660,-1995;-5940,4455;9112,-6834";

// Legs c with c^2 + h^2 a square, found by direct search.
std::vector<long> arms_by_search(long h) {
  std::vector<long> out;
  for (long c = 1; 2 * c + 1 <= h * h; ++c) {
    const long s = c * c + h * h;
    long r = static_cast<long>(std::sqrt(static_cast<double>(s)));
    while (r * r > s) --r;
    while ((r + 1) * (r + 1) <= s) ++r;
    if (r * r == s) out.push_back(c);
  }
  return out;
}

bool rational_set_integral(const std::vector<RatPoint>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const Rat d2 = dist2(v[i], v[j]);
      if (d2.get_den() != 1 || !is_perfect_square(d2.get_num())) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("Pythagorean pairs, rectangles and rhombi") {
  const auto p = PythagoreanPair::make(3, 4);
  CHECK(p.c == 5);
  CHECK(p.primitive);
  CHECK_FALSE(PythagoreanPair::make(6, 8).primitive);
  CHECK_THROWS_AS(PythagoreanPair::make(2, 3), DomainError);
  CHECK_THROWS_AS(PythagoreanPair::make(0, 3), DomainError);
  CHECK(rectangle(p) == PointSet{{0, 0}, {3, 0}, {0, 4}, {3, 4}});
  CHECK(diameter(rectangle(p)) == 5);
  CHECK(rhombus(p).size() == 5);
  CHECK(diameter(rhombus(p)) == 8);
  CHECK(is_integral_set(rhombus(p)));
}

TEST_CASE("crabs") {
  const PointSet c = crab(12, {5, 9, 16, 35});
  CHECK(c.size() == 11);
  CHECK(is_integral_set(c));
  CHECK(diameter(c) == 70);
  CHECK_THROWS_AS(crab(12, {}), DomainError);
  CHECK_THROWS_AS(crab(12, {7}), DomainError);
}

TEST_CASE("decomposition numbers") {
  CHECK(decomposition_g(56, 50, 34) == 1);
  CHECK(decomposition_number(56, 50, 34) == 900);
  CHECK_THROWS_AS(decomposition_number(1, 2, 3), DomainError);
}

TEST_CASE("decomposed crabs") {
  CHECK(crab_arms(30) == std::vector<Int>{16, 40, 72, 224});
  CHECK(decompose_crab(30) == crab(30, {16, 40, 72, 224}));
  CHECK(diameter(decompose_crab(30)) == 448);
  CHECK(decompose_crab(12) == crab(12, {5, 9, 16, 35}));
  CHECK_THROWS_AS(decompose_crab(1), DomainError);
  CHECK_THROWS_AS(decompose_crab(2), DomainError);
  CHECK(crab_order(30) == 4);
  for (long h = 1; h <= 300; ++h) {
    const auto arms = crab_arms(h);
    const auto expect = arms_by_search(h);
    REQUIRE(arms.size() == expect.size());
    for (std::size_t i = 0; i < arms.size(); ++i) REQUIRE(arms[i] == expect[i]);
  }
}

TEST_CASE("crab order equals the arm count") {
  for (long h = 1; h <= 1000; ++h)
    REQUIRE(crab_order(h) == Int(static_cast<unsigned long>(crab_arms(h).size())));
}

TEST_CASE("diameter laws of decomposed crabs") {
  for (long h = 5; h <= 200; ++h) {
    const PointSet c = decompose_crab(h);
    REQUIRE(is_integral_set(c));
    const Int expect = (h % 2) ? Int(h * h - 1) : Int(h * h / 2 - 2);
    REQUIRE(diameter(c) == expect);
  }
}

TEST_CASE("semi-crab with 21 points") {
  const SemiCrab s = semi_crab_details(672, 5, Int(1));
  CHECK(s.b_list == std::vector<Int>{136, 140, 156, 168, 183, 202, 224, 250, 328, 371,
                                     480, 546, 712, 812, 1258, 1884, 2824, 3227,
                                     7527, 11290});
  CHECK(s.gc_list == std::vector<Int>{104, 196, 396, 504, 621, 754, 896, 1054,
                                      1496, 1729, 2304, 2646, 3496, 4004, 6254,
                                      9396, 14104, 16121, 37629, 56446});
  CHECK(s.rational_points.size() == 21);
  CHECK(rational_set_integral(s.rational_points));
  REQUIRE(s.realized);
  CHECK(s.realized->serialize() == kSemiCrab);
  const PointSet P = semi_crab(672, 5, Int(1));
  CHECK(P.size() == 21);
  CHECK(is_integral_set(P));
  CHECK(diameter(P) == 18815);
  CHECK_THROWS_AS(semi_crab_details(672, 1), DomainError);
  CHECK_THROWS_AS(semi_crab_details(670, 5), DomainError);
  CHECK_THROWS_AS(semi_crab_details(672, 5, Int(5)), DomainError);
}

TEST_CASE("semi-crabs for prime denominators") {
  // Every constructed point set is integral, whatever residue is chosen.
  int built = 0;
  for (long g : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    for (long gh : {g * 12 + 1, 420L, 840L}) {
      if (gh % g == 0) continue;
      SemiCrab s;
      try {
        s = semi_crab_details(gh, g);
      } catch (const DomainError&) {
        continue;
      }
      REQUIRE(rational_set_integral(s.rational_points));
      if (s.realized) REQUIRE(is_integral_set(s.realized->as_set()));
      ++built;
    }
  }
  CHECK(built >= 10);
}

TEST_CASE("circle points for R = 65") {
  const auto etas = circle_etas(65);
  REQUIRE(etas.size() == 8);
  CHECK(etas[0] == GaussInt{0, 65});
  CHECK(etas[1] == GaussInt{65, 0});
  CHECK(etas[2] == GaussInt{-52, 39});
  CHECK(etas[3] == GaussInt{39, 52});
  CHECK(etas[4] == GaussInt{-60, 25});
  CHECK(etas[5] == GaussInt{25, 60});
  CHECK(etas[6] == GaussInt{-56, -33});
  CHECK(etas[7] == GaussInt{-33, 56});
  for (const auto& p : circle_points(65)) CHECK(p.x * p.x + p.y * p.y == 65 * 65);
  CHECK(rational_set_integral(circle_points(65)));
  CHECK_THROWS_AS(circle_etas(21), DomainError);
  CHECK_THROWS_AS(circle_etas(1), DomainError);
}

TEST_CASE("circle sets") {
  const PointSet c = circle_set(65);
  CHECK(normal_form(c).serialize() ==
        "0,0;0,-32;-30,40;-30,-72;-63,-16;-96,40;-96,-72;-126,0;-126,-32");
  CHECK(c.size() == 9);
  CHECK(diameter(c) == 130);
  CHECK(isomorphic(circle_tilde(5), rectangle(PythagoreanPair::make(3, 4))));
  const PointSet t = circle_tilde(65);
  CHECK(t.size() == 8);
  CHECK(diameter(t) == 65);
  CHECK(is_integral_set(t));
}

TEST_CASE("scaled circles") {
  const auto sets = circle_scaled(4225, 8);
  REQUIRE_FALSE(sets.empty());
  const PointSet nine{{0, 0}, {0, -504}, {-64, -252}, {612, 255}, {612, -759},
                     {720, 210}, {720, -714}, {836, 123}, {836, -627}};
  bool found = false;
  for (const auto& P : sets) {
    REQUIRE(is_integral_set(P));
    found |= isomorphic(P, nine);
  }
  CHECK(found);
  CHECK(sets.front().size() >= sets.back().size());
  CHECK_THROWS_AS(circle_scaled(65, 0), DomainError);
}

TEST_CASE("realization on the grid") {
  // A rotated rectangle with rational corners maps back onto the grid.
  const std::vector<RatPoint> rot{{0, 0}, {Rat(9, 5), Rat(12, 5)}, {Rat(-16, 5), Rat(12, 5)},
                                  {Rat(-7, 5), Rat(24, 5)}};
  const auto f = realize_on_grid(rot);
  REQUIRE(f);
  CHECK(isomorphic(f->as_set(), rectangle(PythagoreanPair::make(3, 4))));
  CHECK_THROWS_AS(realize_on_grid({{0, 0}, {1, 0}}), DomainError);
}
