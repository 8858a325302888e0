#pragma once

#include "maxips/heronian.hpp"

#include <optional>
#include <vector>

namespace maxips {

enum class SolveMode { integral, rational };

// Two hyperbolas |PA| - |PC| = d1, |PB| - |PC| = d2.
struct HyperbolaSystem {
  GridPoint A, B, C;
  Int d1, d2;
};

// c1*x + c2*y + c3 = 0 in coordinates relative to C.
struct LinearForm {
  Int c1, c2, c3;
};

LinearForm linear_form(const HyperbolaSystem& s);

// Every point (integral or rational per mode) satisfying both equations.
// Points are returned in absolute coordinates, sorted canonically.
std::vector<RatPoint> solve_system(const HyperbolaSystem& s, SolveMode mode);

// Points outside E at integral distance to all three vertices.
// The OpenMP sweep and the serial reference return identical lists.
std::vector<RatPoint> extension_points(const EmbeddedTriangle& E,
                                       SolveMode mode);
std::vector<RatPoint> extension_points_serial(const EmbeddedTriangle& E,
                                              SolveMode mode);
std::vector<GridPoint> integral_extension_points(const EmbeddedTriangle& E);

// Some extension point, stopping the sweep at the first hit.
std::optional<RatPoint> first_extension_point(const EmbeddedTriangle& E,
                                              SolveMode mode);

// Non-collinear triple of P with the smallest longest side (canonical tie-break).
EmbeddedTriangle seed_triangle(const PointSet& P);

// Points outside P at integral distance to every point of P.
std::vector<RatPoint> find_extensions(const PointSet& P, SolveMode mode,
                                      bool stop_at_first = false);

bool is_maximal(const PointSet& P);
bool is_strongly_maximal(const PointSet& P);

bool is_integral(const RatPoint& p);
GridPoint to_grid(const RatPoint& p);
RatPoint to_rat(const GridPoint& p);

}  // namespace maxips
