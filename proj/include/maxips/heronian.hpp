#pragma once

#include "maxips/canon.hpp"
#include "maxips/geometry.hpp"

#include <vector>

namespace maxips {

struct HeronTriangle {
  Int a, b, c;  // a >= b >= c

  // Sorts the sides and validates the Heron condition; DomainError otherwise.
  static HeronTriangle make(Int x, Int y, Int z);
  friend bool operator==(const HeronTriangle&, const HeronTriangle&) = default;
};

// True iff the sides form a proper triangle with integral area.
bool is_heronian(const Int& a, const Int& b, const Int& c);

// All Heronian triangles with longest side exactly d, ordered by (b, c).
std::vector<HeronTriangle> heronian_triangles(const Int& d);
std::vector<HeronTriangle> heronian_triangles(unsigned long d);

bool is_right_triangle(const HeronTriangle& t);

struct EmbeddedTriangle {
  GridPoint A, B, C;

  PointSet points() const { return PointSet({A, B, C}); }
};

// All grid placements with B = (0,0), |BC| = a, |AC| = b, |AB| = c.
// Sides need not be ordered; returns nothing if no placement exists.
std::vector<EmbeddedTriangle> embed_sides(const Int& a, const Int& b,
                                          const Int& c);

// All embeddings of t; with dedup, one representative per isometry class.
std::vector<EmbeddedTriangle> embeddings(const HeronTriangle& t,
                                         bool dedup = false);

}  // namespace maxips
