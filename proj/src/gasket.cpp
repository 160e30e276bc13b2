#include "sierpinski/gasket.hpp"

#include <cmath>
#include <string>

#include "sierpinski/error.hpp"

namespace sierpinski {
namespace {

constexpr Complex midpoint(Complex u, Complex v) { return 0.5 * (u + v); }

}  // namespace

double signed_area(const Triangle& t) {
  const Complex ab = t.b - t.a;
  const Complex ac = t.c - t.a;
  return 0.5 * (ab.re * ac.im - ab.im * ac.re);
}

bool is_degenerate(const Triangle& t) { return signed_area(t) == 0.0; }

Triangle initial_triangle(double side) {
  if (!(side > 0.0) || !std::isfinite(side)) {
    throw DomainError("triangle side length must be positive and finite");
  }
  return {Complex{0.0, 0.0}, Complex{side, 0.0}, Complex{0.5 * side, std::sqrt(3.0) / 2.0 * side}};
}

std::array<Triangle, 3> subdivide_triangle(const Triangle& t) {
  if (is_degenerate(t)) {
    throw DomainError("cannot subdivide a degenerate triangle");
  }
  const Complex ab = midpoint(t.a, t.b);
  const Complex ac = midpoint(t.a, t.c);
  const Complex bc = midpoint(t.b, t.c);
  return {{
      {t.a, ab, ac},
      {ab, t.b, bc},
      {ac, bc, t.c},
  }};
}

TriangleLevel iterate_gasket(double side, int stage) {
  if (stage < 1 || stage > kMaxGasketStage) {
    throw DomainError("stage must be in [1, " + std::to_string(kMaxGasketStage) + "], got " +
                      std::to_string(stage));
  }
  TriangleLevel level{1, {initial_triangle(side)}};
  while (level.stage < stage) {
    std::vector<Triangle> next;
    next.reserve(level.triangles.size() * 3);
    for (const auto& t : level.triangles) {
      const auto children = subdivide_triangle(t);
      next.insert(next.end(), children.begin(), children.end());
    }
    level.triangles = std::move(next);
    ++level.stage;
  }
  return level;
}

PointPath triangles_to_path(const TriangleLevel& level) {
  PointPath path;
  for (const auto& t : level.triangles) {
    path.lift_pen();
    path.add_point(t.a);
    path.add_point(t.b);
    path.add_point(t.c);
    path.add_point(t.a);
  }
  return path;
}

}  // namespace sierpinski
