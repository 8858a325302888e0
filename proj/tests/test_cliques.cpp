#include <doctest.h>

#include "maxips/cliques.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace maxips;

namespace {

std::vector<Bits> random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution edge(p);
  std::vector<Bits> adj(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) {
        adj[i].set(j);
        adj[j].set(i);
      }
  return adj;
}

std::vector<Clique> sorted(std::vector<Clique> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Maximal members of the clique family cut down by a pairwise rule.
std::vector<Clique> filtered_oracle(const std::vector<Bits>& adj,
                                    const std::function<bool(std::size_t, std::size_t)>& ok) {
  const std::size_t n = adj.size();
  auto good = [&](std::uint32_t S) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if ((S >> i & 1U) && (S >> j & 1U) && (!adj[i].test(j) || !ok(i, j)))
          return false;
    return true;
  };
  std::vector<Clique> out;
  for (std::uint32_t S = 0; S < (1U << n); ++S) {
    if (!good(S)) continue;
    bool maximal = true;
    for (std::size_t w = 0; w < n && maximal; ++w)
      if (!(S >> w & 1U) && good(S | (1U << w))) maximal = false;
    if (!maximal) continue;
    Clique c;
    for (std::size_t i = 0; i < n; ++i)
      if (S >> i & 1U) c.push_back(i);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("bit sets") {
  Bits b(130);
  CHECK(b.none());
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.test(64));
  CHECK_FALSE(b.test(63));
  std::vector<std::size_t> seen;
  b.for_each([&](std::size_t i) { seen.push_back(i); });
  CHECK(seen == std::vector<std::size_t>{0, 64, 129});
  Bits c(130);
  c.set(64);
  CHECK((b & c).count() == 1);
  CHECK(b.and_not(c).count() == 2);
  c |= b;
  CHECK(c.count() == 3);
  b.reset(64);
  CHECK(b.count() == 2);
}

TEST_CASE("small graphs") {
  CHECK(bron_kerbosch({}) == std::vector<Clique>{{}});
  std::vector<Bits> tri(3, Bits(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) tri[i].set(j);
  CHECK(bron_kerbosch(tri) == std::vector<Clique>{{0, 1, 2}});
  std::vector<Bits> isolated(3, Bits(3));
  CHECK(sorted(bron_kerbosch(isolated)) == std::vector<Clique>{{0}, {1}, {2}});
}

TEST_CASE("pivoting enumeration matches a subset scan on random graphs") {
  std::mt19937 rng(23);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 1 + round % 16;
    const auto adj = random_graph(n, 0.2 + 0.1 * (round % 7), rng);
    REQUIRE(sorted(bron_kerbosch(adj)) == oracle::maximal_cliques(adj));
  }
}

TEST_CASE("pivoting enumeration matches a subset scan on extension graphs") {
  std::size_t graphs = 0;
  for (unsigned long d = 1; d <= 40; ++d)
    for (const auto& t : heronian_triangles(d))
      for (const auto& e : embeddings(t, true)) {
        const auto G = build_graph(e);
        if (G.vertices.size() > 20) continue;
        REQUIRE(sorted(bron_kerbosch(G.adj)) == oracle::maximal_cliques(G.adj));
        ++graphs;
      }
  CHECK(graphs > 20);
}

TEST_CASE("filtered enumeration matches a subset scan") {
  std::mt19937 rng(29);
  auto apart = [](std::size_t i, std::size_t j) { return (i + j) % 3 != 0; };
  auto accept = [&](const Clique& R, std::size_t v) {
    return std::all_of(R.begin(), R.end(), [&](std::size_t r) { return apart(r, v); });
  };
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 2 + round % 13;
    const auto adj = random_graph(n, 0.5, rng);
    REQUIRE(sorted(bron_kerbosch_filtered(adj, accept)) ==
            filtered_oracle(adj, apart));
  }
  // Accepting everything gives the plain enumeration.
  const auto adj = random_graph(14, 0.5, rng);
  CHECK(sorted(bron_kerbosch_filtered(adj, [](const Clique&, std::size_t) {
          return true;
        })) == sorted(bron_kerbosch(adj)));
}

TEST_CASE("integral distance adjacency") {
  const std::vector<GridPoint> v{{0, 0}, {3, 4}, {1, 1}, {0, 8}};
  const auto adj = integral_distance_adjacency(v);
  CHECK(adj[0].test(1));
  CHECK(adj[1].test(0));
  CHECK_FALSE(adj[0].test(2));
  CHECK(adj[0].test(3));
  CHECK(adj[1].test(3));
  CHECK_FALSE(adj[0].test(0));
  // Coordinates beyond the machine-word fast path.
  const Int big("1000000000000");
  const std::vector<GridPoint> w{{big, big}, {big + 3, big + 4}, {big + 1, big}};
  const auto badj = integral_distance_adjacency(w);
  CHECK(badj[0].test(1));
  CHECK(badj[0].test(2));
  CHECK_FALSE(badj[1].test(2));
}

TEST_CASE("the five maximal sets over E2") {
  const EmbeddedTriangle e2{{0, 0}, {15, 20}, {0, 20}};
  const auto G = build_graph(e2);
  CHECK(G.vertices.size() == 16);
  const auto sets = maximal_cliques(G, true);
  std::multiset<std::pair<std::size_t, long>> got;
  for (const auto& m : sets) got.insert({m.cardinality, m.diameter.get_si()});
  CHECK(got == std::multiset<std::pair<std::size_t, long>>{
                   {4, 25}, {5, 119}, {9, 96}, {11, 198}, {11, 224}});
  const PointSet m4{{0, 0}, {15, 20}, {0, 20}, {0, 40}, {-15, 20}, {-21, 20},
                    {21, 20}, {-48, 20}, {48, 20}, {-99, 20}, {99, 20}};
  bool found = false;
  for (const auto& m : sets) found |= m.canonical == normal_form(m4);
  CHECK(found);
}

TEST_CASE("position constrained cliques") {
  const EmbeddedTriangle e2{{0, 0}, {15, 20}, {0, 20}};
  const auto G = build_graph(e2);
  for (Position f : {Position::semi_general, Position::general}) {
    const auto sets = constrained_maximal_cliques(G, f);
    CHECK_FALSE(sets.empty());
    for (const auto& s : sets) {
      const auto& P = s.set.points;
      REQUIRE(satisfies(position_class(P), f));
      REQUIRE(s.maximal == is_maximal(P));
      // Nothing from the graph can join without breaking the filter.
      for (const auto& q : G.vertices) {
        if (P.contains(q)) continue;
        const PointSet Q = P.with(q);
        if (is_integral_set(Q)) REQUIRE_FALSE(satisfies(position_class(Q), f));
      }
    }
  }
  const auto plain = constrained_maximal_cliques(G, Position::arbitrary);
  CHECK(plain.size() == 5);
  for (const auto& s : plain) CHECK(s.maximal);
}
