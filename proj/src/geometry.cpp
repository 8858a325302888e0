#include "maxips/geometry.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace maxips {

bool point_less(const GridPoint& p, const GridPoint& q) {
  return lattice_order_less(p.x, p.y, q.x, q.y);
}

bool rat_point_less(const RatPoint& p, const RatPoint& q) {
  int c = cmp(abs(p.x), abs(q.x));
  if (c != 0) return c < 0;
  bool p1 = sgn(p.x) > 0, p2 = sgn(q.x) > 0;
  if (p1 != p2) return !p1;
  c = cmp(abs(p.y), abs(q.y));
  if (c != 0) return c < 0;
  return sgn(p.y) <= 0 && sgn(q.y) > 0;
}

GridPoint operator-(const GridPoint& p, const GridPoint& q) {
  return {p.x - q.x, p.y - q.y};
}

GridPoint operator+(const GridPoint& p, const GridPoint& q) {
  return {p.x + q.x, p.y + q.y};
}

PointSet::PointSet(std::vector<GridPoint> pts) : pts_(std::move(pts)) {
  std::sort(pts_.begin(), pts_.end(), point_less);
  for (std::size_t i = 1; i < pts_.size(); ++i)
    if (pts_[i] == pts_[i - 1])
      throw DomainError("duplicate point (" + pts_[i].x.get_str() + "," +
                        pts_[i].y.get_str() + ")");
}

PointSet::PointSet(std::initializer_list<std::pair<long, long>> pts) {
  std::vector<GridPoint> v;
  for (const auto& [x, y] : pts) v.push_back({Int(x), Int(y)});
  *this = PointSet(std::move(v));
}

bool PointSet::contains(const GridPoint& p) const {
  return std::binary_search(pts_.begin(), pts_.end(), p, point_less);
}

PointSet PointSet::with(const GridPoint& p) const {
  std::vector<GridPoint> v = pts_;
  v.push_back(p);
  return PointSet(std::move(v));
}

Int dist2(const GridPoint& p, const GridPoint& q) {
  Int dx = p.x - q.x, dy = p.y - q.y;
  return dx * dx + dy * dy;
}

Rat dist2(const RatPoint& p, const RatPoint& q) {
  Rat dx = p.x - q.x, dy = p.y - q.y;
  return dx * dx + dy * dy;
}

std::optional<Int> integral_distance(const GridPoint& p, const GridPoint& q) {
  return perfect_square_root(dist2(p, q));
}

bool all_collinear(const PointSet& P) {
  const auto& v = P.points();
  if (v.size() < 3) return true;
  for (std::size_t k = 2; k < v.size(); ++k)
    if (!collinear(v[0], v[1], v[k])) return false;
  return true;
}

bool is_integral_set(const PointSet& P) {
  const auto& v = P.points();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (!is_perfect_square(dist2(v[i], v[j]))) return false;
  if (v.size() >= 3 && all_collinear(P)) return false;
  return true;
}

Int diameter(const PointSet& P) {
  const auto& v = P.points();
  if (v.size() < 2) throw DomainError("diameter needs at least two points");
  Int best = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      auto d = integral_distance(v[i], v[j]);
      if (!d) throw DomainError("diameter of a set with a non-integral pair");
      if (*d > best) best = *d;
    }
  return best;
}

bool collinear(const GridPoint& p, const GridPoint& q, const GridPoint& r) {
  return (q.x - p.x) * (r.y - p.y) == (q.y - p.y) * (r.x - p.x);
}

bool collinear(const RatPoint& p, const RatPoint& q, const RatPoint& r) {
  return (q.x - p.x) * (r.y - p.y) == (q.y - p.y) * (r.x - p.x);
}

bool concyclic(const GridPoint& p, const GridPoint& q, const GridPoint& r,
               const GridPoint& s) {
  if (collinear(p, q, r) || collinear(p, q, s) || collinear(p, r, s) ||
      collinear(q, r, s))
    return false;
  // 4x4 determinant reduced to 3x3 by subtracting the row of p.
  auto row = [&](const GridPoint& t) {
    Int dx = t.x - p.x, dy = t.y - p.y;
    return std::array<Int, 3>{dx, dy, dx * dx + dy * dy};
  };
  const auto a = row(q), b = row(r), c = row(s);
  Int det = a[0] * (b[1] * c[2] - b[2] * c[1]) -
            a[1] * (b[0] * c[2] - b[2] * c[0]) +
            a[2] * (b[0] * c[1] - b[1] * c[0]);
  return det == 0;
}

std::string to_string(Position p) {
  switch (p) {
    case Position::arbitrary: return "arbitrary";
    case Position::semi_general: return "semi_general";
    case Position::general: return "general";
  }
  return "arbitrary";
}

Position position_class(const PointSet& P) {
  const auto& v = P.points();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (collinear(v[i], v[j], v[k])) return Position::arbitrary;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
          if (concyclic(v[i], v[j], v[k], v[l])) return Position::semi_general;
  return Position::general;
}

bool satisfies(Position actual, Position required) {
  return static_cast<int>(actual) >= static_cast<int>(required);
}

Int triangle_characteristic(const Int& a, const Int& b, const Int& c) {
  Int prod = (a + b + c) * (a + b - c) * (a - b + c) * (-a + b + c);
  if (sgn(prod) <= 0) throw DomainError("degenerate triangle");
  return squarefree_part(prod);
}

namespace {

Int side(const GridPoint& p, const GridPoint& q) {
  auto d = integral_distance(p, q);
  if (!d) throw DomainError("characteristic needs pairwise integral distances");
  return *d;
}

}  // namespace

Int characteristic(const PointSet& P) {
  const auto& v = P.points();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (collinear(v[i], v[j], v[k])) continue;
        Int ch = triangle_characteristic(side(v[i], v[j]), side(v[j], v[k]),
                                         side(v[i], v[k]));
#ifndef NDEBUG
        for (std::size_t l = k + 1; l < n; ++l)
          if (!collinear(v[i], v[j], v[l])) {
            assert(ch == triangle_characteristic(side(v[i], v[j]),
                                                 side(v[j], v[l]),
                                                 side(v[i], v[l])));
            break;
          }
#endif
        return ch;
      }
  throw DomainError("characteristic of a collinear set");
}

PointSet scale(const PointSet& P, const Int& lambda) {
  if (lambda < 1) throw DomainError("scale factor must be >= 1");
  std::vector<GridPoint> v;
  for (const auto& p : P) v.push_back({p.x * lambda, p.y * lambda});
  return PointSet(std::move(v));
}

PointSet translate(const PointSet& P, const GridPoint& t) {
  std::vector<GridPoint> v;
  for (const auto& p : P) v.push_back(p + t);
  return PointSet(std::move(v));
}

}  // namespace maxips
