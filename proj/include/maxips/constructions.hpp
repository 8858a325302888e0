#pragma once

#include "maxips/canon.hpp"
#include "maxips/geometry.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace maxips {

struct PythagoreanPair {
  Int a, b, c;
  bool primitive = false;

  // DomainError unless a, b >= 1 and a^2 + b^2 is a square.
  static PythagoreanPair make(const Int& a, const Int& b);
};

PointSet rectangle(const PythagoreanPair& p);
PointSet rhombus(const PythagoreanPair& p);
// {(0,0), (0,+-a), (+-b_i,0)}.
PointSet crab(const Int& a, const std::vector<Int>& arms);

Int decomposition_number(const Int& a, const Int& b, const Int& c);
Int decomposition_g(const Int& a, const Int& b, const Int& c);

// Arms (f1 - f2)/2 over factor pairs f1 > f2 of h^2 with equal parity.
std::vector<Int> crab_arms(const Int& h);
PointSet decompose_crab(const Int& h);
Int crab_order(const Int& h);

// Rational point set mapped isometrically onto Z^2; the realization with the
// smallest canonical form, or nothing when no anchor placement lands on the grid.
std::optional<CanonicalForm> realize_on_grid(const std::vector<RatPoint>& pts);

struct SemiCrab {
  Int gh, g, m;
  std::vector<std::pair<Int, Int>> factor_pairs;  // (f1, f2), f1 ascending
  std::vector<Int> b_list;                        // apex distances
  std::vector<Int> gc_list;                       // g times base offsets
  std::vector<RatPoint> rational_points;          // apex first
  std::optional<CanonicalForm> realized;
};

// Raised when a rational construction cannot be placed on the grid.
class RealizationError : public std::runtime_error {
 public:
  RealizationError(const std::string& what, std::vector<RatPoint> pts)
      : std::runtime_error(what), points(std::move(pts)) {}
  std::vector<RatPoint> points;
};

SemiCrab semi_crab_details(const Int& gh, const Int& g,
                           std::optional<Int> m = std::nullopt);
PointSet semi_crab(const Int& gh, const Int& g,
                   std::optional<Int> m = std::nullopt);

// Gaussian integers eta_1 .. eta_{2 tau(R)}.
std::vector<GaussInt> circle_etas(const Int& R);
// xi_s = eta_s^2 / R on the circle of radius R about the origin.
std::vector<RatPoint> circle_points(const Int& R);

PointSet circle_set(const Int& R);
PointSet circle_tilde(const Int& R);
std::vector<PointSet> circle_scaled(const Int& R, const Int& t);

}  // namespace maxips
