#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "sierpinski/complex.hpp"
#include "sierpinski/path.hpp"

namespace sierpinski {

struct Viewport {
  double xmin = 0.0;
  double xmax = 1.0;
  double ymin = 0.0;
  double ymax = 1.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }

  friend bool operator==(const Viewport&, const Viewport&) = default;
};

enum class RenderMode { Scatter, Polyline };

struct RenderStyle {
  RenderMode mode = RenderMode::Scatter;
  int canvas_width = 640;
  int canvas_height = 640;
  double margin = 0.05;  // fraction of the bounding box added on each side
  int point_radius = 1;
  int stroke_width = 1;
  // Points with a real part above this are not drawn and do not affect the
  // viewport. The default matches the sentinel classifier.
  double clip_threshold = 2.0;

  /// Throws DomainError for canvas < 16, margin outside [0, 0.5], etc.
  void validate() const;
};

inline bool is_clipped(Complex z, const RenderStyle& style) { return z.re > style.clip_threshold; }

/// Bounding box of the unclipped points, padded, widened by the margin and
/// then grown along the short axis to the canvas aspect ratio.
/// Throws DomainError("all points clipped") if nothing survives clipping.
Viewport fit_viewport(const PointPath& g, const RenderStyle& style);

/// Runs of consecutive unclipped points, split at pen-ups and at clipped
/// points. Single-point runs are kept.
std::vector<std::vector<Complex>> drawable_runs(const PointPath& g, const RenderStyle& style);

/// Canvas coordinates (pixels, y down) of a plane point.
struct CanvasPoint {
  double x;
  double y;
};
CanvasPoint to_canvas(Complex z, const Viewport& vp, const RenderStyle& style);

/// SVG 1.1 document. Scatter mode draws one circle per unclipped point;
/// polyline mode one polyline per drawable run of two or more points.
std::string render_svg(const PointPath& g, const RenderStyle& style, const Viewport& vp);

/// Binary P6 pixmap, black marks on white.
std::vector<std::uint8_t> render_ppm(const PointPath& g, const RenderStyle& style, const Viewport& vp);

}  // namespace sierpinski
