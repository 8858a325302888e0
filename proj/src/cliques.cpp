#include "maxips/cliques.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace maxips {

bool Bits::none() const {
  for (auto w : w_)
    if (w) return false;
  return true;
}

std::size_t Bits::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

Bits& Bits::operator&=(const Bits& o) {
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
  return *this;
}

Bits& Bits::operator|=(const Bits& o) {
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
  return *this;
}

Bits Bits::and_not(const Bits& o) const {
  Bits r = *this;
  for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= ~o.w_[k];
  return r;
}

namespace {

// Pivoting adds vertices out of index order.
void emit(const Clique& R, std::vector<Clique>& out) {
  out.push_back(R);
  std::sort(out.back().begin(), out.back().end());
}

void bk_pivot(const std::vector<Bits>& adj, Clique& R, Bits P, Bits X,
              std::vector<Clique>& out) {
  if (P.none() && X.none()) {
    emit(R, out);
    return;
  }
  std::size_t pivot = 0, best = 0;
  bool have = false;
  auto consider = [&](std::size_t u) {
    const std::size_t c = (P & adj[u]).count();
    if (!have || c > best) {
      pivot = u, best = c, have = true;
    }
  };
  P.for_each(consider);
  X.for_each(consider);
  const Bits todo = P.and_not(adj[pivot]);
  todo.for_each([&](std::size_t v) {
    R.push_back(v);
    bk_pivot(adj, R, P & adj[v], X & adj[v], out);
    R.pop_back();
    P.reset(v);
    X.set(v);
  });
}

void bk_filtered(const std::vector<Bits>& adj,
                 const std::function<bool(const Clique&, std::size_t)>& accept,
                 Clique& R, Bits P, Bits X, std::vector<Clique>& out) {
  Bits P2(P.size()), X2(X.size());
  P.for_each([&](std::size_t v) {
    if (accept(R, v)) P2.set(v);
  });
  X.for_each([&](std::size_t v) {
    if (accept(R, v)) X2.set(v);
  });
  if (P2.none() && X2.none()) {
    emit(R, out);
    return;
  }
  const Bits todo = P2;
  todo.for_each([&](std::size_t v) {
    R.push_back(v);
    bk_filtered(adj, accept, R, P2 & adj[v], X2 & adj[v], out);
    R.pop_back();
    P2.reset(v);
    X2.set(v);
  });
}

Bits full(std::size_t n) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i);
  return b;
}

}  // namespace

std::vector<Clique> bron_kerbosch(const std::vector<Bits>& adj) {
  std::vector<Clique> out;
  Clique R;
  bk_pivot(adj, R, full(adj.size()), Bits(adj.size()), out);
  return out;
}

std::vector<Clique> bron_kerbosch_filtered(
    const std::vector<Bits>& adj,
    const std::function<bool(const Clique&, std::size_t)>& accept) {
  std::vector<Clique> out;
  Clique R;
  bk_filtered(adj, accept, R, full(adj.size()), Bits(adj.size()), out);
  return out;
}

std::size_t ExtensionGraph::edge_count() const {
  std::size_t c = 0;
  for (const auto& row : adj) c += row.count();
  return c / 2;
}

namespace {

bool small_coords(const std::vector<GridPoint>& v) {
  const Int lim = Int(1) << 30;
  for (const auto& p : v)
    if (abs(p.x) >= lim || abs(p.y) >= lim) return false;
  return true;
}

bool square_u64(std::uint64_t n) {
  const std::uint64_t s = isqrt_u64(n);
  return s * s == n;
}

}  // namespace

std::vector<Bits> integral_distance_adjacency(const std::vector<GridPoint>& v) {
  const std::size_t n = v.size();
  std::vector<Bits> adj(n, Bits(n));
  if (small_coords(v)) {
    std::vector<std::int64_t> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = v[i].x.get_si();
      ys[i] = v[i].y.get_si();
    }
#pragma omp parallel for schedule(dynamic, 8)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const std::int64_t dx = xs[i] - xs[j], dy = ys[i] - ys[j];
        const auto d2 = static_cast<std::uint64_t>(dx * dx + dy * dy);
        if (d2 > 0 && square_u64(d2)) adj[i].set(j);
      }
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const Int d2 = dist2(v[i], v[j]);
        if (d2 > 0 && is_perfect_square(d2)) adj[i].set(j);
      }
  }
  return adj;
}

ExtensionGraph build_graph(const EmbeddedTriangle& E) {
  ExtensionGraph G;
  G.seed = E;
  G.vertices = integral_extension_points(E);
  G.adj = integral_distance_adjacency(G.vertices);
  return G;
}

MaximalSet make_maximal_set(PointSet P) {
  MaximalSet m;
  m.cardinality = P.size();
  m.diameter = diameter(P);
  m.canonical = normal_form(P);
  m.points = std::move(P);
  return m;
}

namespace {

PointSet clique_points(const ExtensionGraph& G, const Clique& c) {
  std::vector<GridPoint> v{G.seed.A, G.seed.B, G.seed.C};
  for (auto i : c) v.push_back(G.vertices[i]);
  return PointSet(std::move(v));
}

}  // namespace

std::vector<MaximalSet> maximal_cliques(const ExtensionGraph& G, bool verify) {
  std::vector<MaximalSet> out;
  for (const auto& c : bron_kerbosch(G.adj)) {
    MaximalSet m = make_maximal_set(clique_points(G, c));
    if (verify && !is_maximal(m.points))
      throw std::logic_error("clique " + m.canonical.serialize() +
                             " is not a maximal point set");
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<FilteredSet> constrained_maximal_cliques(const ExtensionGraph& G,
                                                     Position filter) {
  const std::vector<GridPoint> seed{G.seed.A, G.seed.B, G.seed.C};
  if (!satisfies(position_class(PointSet(seed)), filter))
    throw DomainError("seed triangle violates the position filter");
  const bool circles = filter == Position::general;
  auto accept = [&](const Clique& R, std::size_t v) {
    if (filter == Position::arbitrary) return true;
    std::vector<const GridPoint*> S;
    for (const auto& s : seed) S.push_back(&s);
    for (auto r : R) S.push_back(&G.vertices[r]);
    const GridPoint& q = G.vertices[v];
    const std::size_t n = S.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (collinear(*S[i], *S[j], q)) return false;
        if (!circles) continue;
        for (std::size_t k = j + 1; k < n; ++k)
          if (concyclic(*S[i], *S[j], *S[k], q)) return false;
      }
    return true;
  };
  std::vector<FilteredSet> out;
  const std::size_t n = G.vertices.size();
  for (const auto& c : bron_kerbosch_filtered(G.adj, accept)) {
    Bits common = full(n);
    for (auto i : c) common &= G.adj[i];
    FilteredSet f;
    f.set = make_maximal_set(clique_points(G, c));
    f.maximal_within_filter = true;
    f.maximal = common.none();
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace maxips
