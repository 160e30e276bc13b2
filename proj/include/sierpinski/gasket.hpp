#pragma once

#include <array>
#include <vector>

#include "sierpinski/complex.hpp"
#include "sierpinski/path.hpp"

namespace sierpinski {

struct Triangle {
  Complex a;
  Complex b;
  Complex c;

  friend constexpr bool operator==(const Triangle&, const Triangle&) = default;
};

/// Signed area, positive for counterclockwise vertex order.
double signed_area(const Triangle& t);

/// True when the vertices span zero area (this includes coincident vertices).
bool is_degenerate(const Triangle& t);

/// All triangles of one stage of the midpoint construction. Stage 1 is the
/// uncut triangle; stage k holds 3^(k-1) triangles.
struct TriangleLevel {
  int stage = 1;
  std::vector<Triangle> triangles;
};

inline constexpr int kMaxGasketStage = 12;

/// Vertices 0, L and L/2 + i*(sqrt(3)/2)*L.
Triangle initial_triangle(double side);

/// The three corner triangles left after cutting out the midpoint triangle,
/// ordered corner-at-a, corner-at-b, corner-at-c.
std::array<Triangle, 3> subdivide_triangle(const Triangle& t);

/// Stage `stage` of the construction started from initial_triangle(side).
/// Children of each triangle are emitted in place, in subdivision order.
TriangleLevel iterate_gasket(double side, int stage);

/// Closed outline a, b, c, a per triangle, separated by pen-ups.
PointPath triangles_to_path(const TriangleLevel& level);

}  // namespace sierpinski
