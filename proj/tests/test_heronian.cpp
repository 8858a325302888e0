#include <doctest.h>

#include "maxips/heronian.hpp"

#include <cmath>
#include <set>
#include <tuple>

using namespace maxips;

namespace {

// 16 * area^2 as a plain integer; integral area iff it is (4k)^2.
bool heronian_oracle(long a, long b, long c) {
  if (a >= b + c || b >= a + c || c >= a + b) return false;
  const long p = (a + b + c) * (a + b - c) * (a - b + c) * (-a + b + c);
  long s = static_cast<long>(std::sqrt(static_cast<double>(p)));
  while (s * s > p) --s;
  while ((s + 1) * (s + 1) <= p) ++s;
  return s * s == p && s % 4 == 0;
}

// Lattice points at distance r from the origin, by scanning a box.
std::vector<std::pair<long, long>> circle_scan(long r) {
  std::vector<std::pair<long, long>> out;
  for (long x = -r; x <= r; ++x)
    for (long y = -r; y <= r; ++y)
      if (x * x + y * y == r * r) out.emplace_back(x, y);
  return out;
}

std::size_t embedding_count_oracle(long a, long b, long c) {
  std::size_t n = 0;
  for (const auto& [cx, cy] : circle_scan(a))
    for (const auto& [ax, ay] : circle_scan(c))
      if ((ax - cx) * (ax - cx) + (ay - cy) * (ay - cy) == b * b) ++n;
  return n;
}

}  // namespace

TEST_CASE("Heronian predicate") {
  CHECK(is_heronian(5, 4, 3));
  CHECK(is_heronian(15, 14, 13));
  CHECK(is_heronian(2066, 1803, 505));
  CHECK_FALSE(is_heronian(2, 2, 2));
  CHECK_FALSE(is_heronian(3, 2, 1));
  CHECK_FALSE(is_heronian(0, 4, 3));
  CHECK(HeronTriangle::make(3, 5, 4) == HeronTriangle{5, 4, 3});
  CHECK_THROWS_AS(HeronTriangle::make(1, 1, 1), DomainError);
  CHECK(is_right_triangle(HeronTriangle::make(25, 20, 15)));
  CHECK_FALSE(is_right_triangle(HeronTriangle::make(15, 14, 13)));
}

TEST_CASE("enumeration matches a brute-force scan for d <= 200") {
  for (long d = 1; d <= 200; ++d) {
    std::vector<std::tuple<long, long, long>> expect;
    for (long b = 1; b <= d; ++b)
      for (long c = 1; c <= b; ++c)
        if (heronian_oracle(d, b, c)) expect.emplace_back(d, b, c);
    const auto got = heronian_triangles(static_cast<unsigned long>(d));
    REQUIRE(got.size() == expect.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      const auto& [a, b, c] = expect[i];
      REQUIRE(got[i] == HeronTriangle{a, b, c});
    }
  }
  CHECK(heronian_triangles(5UL).size() == 1);
  CHECK(heronian_triangles(0UL).empty());
}

TEST_CASE("Int overload agrees with the machine-word path") {
  for (unsigned long d : {1UL, 25UL, 130UL, 2066UL})
    CHECK(heronian_triangles(Int(d)) == heronian_triangles(d));
}

TEST_CASE("embeddings place the sides exactly") {
  for (long d = 5; d <= 40; ++d)
    for (const auto& t : heronian_triangles(static_cast<unsigned long>(d))) {
      const auto es = embeddings(t);
      REQUIRE(es.size() == embedding_count_oracle(d, t.b.get_si(), t.c.get_si()));
      for (const auto& e : es) {
        REQUIRE(e.B == GridPoint{0, 0});
        REQUIRE(dist2(e.B, e.C) == t.a * t.a);
        REQUIRE(dist2(e.A, e.C) == t.b * t.b);
        REQUIRE(dist2(e.A, e.B) == t.c * t.c);
      }
    }
}

TEST_CASE("embedding classes of (25,20,15)") {
  const auto t = HeronTriangle::make(25, 20, 15);
  const auto classes = embeddings(t, true);
  CHECK(classes.size() == 3);
  std::set<std::string> forms;
  for (const auto& e : classes) forms.insert(normal_form(e.points()).serialize());
  CHECK(forms.size() == 3);
  CHECK(forms.count(normal_form(PointSet{{0, 0}, {15, 20}, {0, 20}}).serialize()));
  CHECK(forms.count(normal_form(PointSet{{0, 0}, {25, 0}, {9, 12}}).serialize()));
  // (13,14,15) fits the grid only one way up to isometry.
  CHECK(embeddings(HeronTriangle::make(15, 14, 13), true).size() == 1);
  CHECK(embed_sides(5, 5, 5).empty());
}
