#pragma once

#include "maxips/canon.hpp"
#include "maxips/extension.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace maxips {

// Fixed-size bit set over vertex indices.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { w_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1U; }
  bool none() const;
  std::size_t count() const;
  Bits& operator&=(const Bits& o);
  Bits& operator|=(const Bits& o);
  Bits and_not(const Bits& o) const;
  // Calls f(i) for every set bit in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }

  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

using Clique = std::vector<std::size_t>;

// Maximal cliques of an undirected graph (Tomita pivoting), each ascending,
// in deterministic discovery order. A graph without vertices has one empty clique.
std::vector<Clique> bron_kerbosch(const std::vector<Bits>& adj);

// Cliques that are maximal among those accepted by a hereditary predicate.
// accept(R, v) decides whether R + {v} is still admissible.
std::vector<Clique> bron_kerbosch_filtered(
    const std::vector<Bits>& adj,
    const std::function<bool(const Clique&, std::size_t)>& accept);

struct ExtensionGraph {
  EmbeddedTriangle seed;
  std::vector<GridPoint> vertices;  // canonical order
  std::vector<Bits> adj;

  std::size_t edge_count() const;
};

// Adjacency by positive integral distance between grid points.
std::vector<Bits> integral_distance_adjacency(const std::vector<GridPoint>& v);

ExtensionGraph build_graph(const EmbeddedTriangle& E);

struct MaximalSet {
  PointSet points;
  std::size_t cardinality = 0;
  Int diameter;
  CanonicalForm canonical;
};

MaximalSet make_maximal_set(PointSet P);

// seed + C for every maximal clique C; verify re-checks each with is_maximal.
std::vector<MaximalSet> maximal_cliques(const ExtensionGraph& G,
                                        bool verify = false);

struct FilteredSet {
  MaximalSet set;
  bool maximal_within_filter = true;
  bool maximal = false;  // no grid point at all extends the set
};

std::vector<FilteredSet> constrained_maximal_cliques(const ExtensionGraph& G,
                                                     Position filter);

}  // namespace maxips
