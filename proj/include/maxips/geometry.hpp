#pragma once

#include "maxips/exactmath.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace maxips {

struct GridPoint {
  Int x;
  Int y;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

struct RatPoint {
  Rat x;
  Rat y;

  friend bool operator==(const RatPoint&, const RatPoint&) = default;
};

// Canonical total order on Z^2 (see lattice_order_less).
bool point_less(const GridPoint& p, const GridPoint& q);
bool rat_point_less(const RatPoint& p, const RatPoint& q);

GridPoint operator-(const GridPoint& p, const GridPoint& q);
GridPoint operator+(const GridPoint& p, const GridPoint& q);

// Distinct grid points kept in canonical order.
class PointSet {
 public:
  PointSet() = default;
  // Throws DomainError on duplicate points.
  explicit PointSet(std::vector<GridPoint> pts);
  PointSet(std::initializer_list<std::pair<long, long>> pts);

  const std::vector<GridPoint>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const GridPoint& operator[](std::size_t i) const { return pts_[i]; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

  bool contains(const GridPoint& p) const;
  // Copy with p added; p must not already be present.
  PointSet with(const GridPoint& p) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<GridPoint> pts_;
};

Int dist2(const GridPoint& p, const GridPoint& q);
Rat dist2(const RatPoint& p, const RatPoint& q);
std::optional<Int> integral_distance(const GridPoint& p, const GridPoint& q);

bool is_integral_set(const PointSet& P);
// Largest pairwise distance; DomainError when some pair is non-integral.
Int diameter(const PointSet& P);

bool collinear(const GridPoint& p, const GridPoint& q, const GridPoint& r);
bool collinear(const RatPoint& p, const RatPoint& q, const RatPoint& r);
bool all_collinear(const PointSet& P);
// True only for a genuine circle: no three of the four points collinear.
bool concyclic(const GridPoint& p, const GridPoint& q, const GridPoint& r,
               const GridPoint& s);

enum class Position { arbitrary, semi_general, general };
std::string to_string(Position p);

Position position_class(const PointSet& P);
bool satisfies(Position actual, Position required);

// Square-free part of the Heron product of integral sides a, b, c.
Int triangle_characteristic(const Int& a, const Int& b, const Int& c);
Int characteristic(const PointSet& P);

PointSet scale(const PointSet& P, const Int& lambda);
PointSet translate(const PointSet& P, const GridPoint& t);

}  // namespace maxips
