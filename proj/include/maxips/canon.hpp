#pragma once

#include "maxips/geometry.hpp"

#include <array>
#include <string>
#include <vector>

namespace maxips {

struct OrthoMatrix {
  int a, b, c, d;  // [[a, b], [c, d]]

  GridPoint apply(const GridPoint& p) const;
};

// The 8 orthogonal integer 2x2 matrices.
const std::array<OrthoMatrix, 8>& ortho_matrices();

std::vector<GridPoint> list_repr(const PointSet& P);
// Lexicographic comparison of point lists under point_less.
bool list_less(const std::vector<GridPoint>& a, const std::vector<GridPoint>& b);

struct CanonicalForm {
  std::vector<GridPoint> repr;

  // "x,y;x,y;..." with no whitespace.
  std::string serialize() const;
  PointSet as_set() const { return PointSet(repr); }

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    return list_less(a.repr, b.repr);
  }
};

CanonicalForm parse_canonical(const std::string& s);

CanonicalForm normal_form(const PointSet& P);
bool isomorphic(const PointSet& P, const PointSet& Q);

}  // namespace maxips
