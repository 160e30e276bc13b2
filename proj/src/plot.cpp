#include "sierpinski/plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string_view>

#include "sierpinski/error.hpp"

namespace sierpinski {
namespace {

constexpr std::uint8_t kWhite = 255;
constexpr std::uint8_t kBlack = 0;

// Fixed 4 fractional digits; "-0.0000" is normalized to "0.0000".
void append_coord(std::string& out, double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 4);
  std::string_view s(buf, static_cast<std::size_t>(res.ptr - buf));
  if (s == "-0.0000") {
    s.remove_prefix(1);
  }
  out.append(s);
}

void append_pair(std::string& out, const CanvasPoint& p) {
  append_coord(out, p.x);
  out.push_back(',');
  append_coord(out, p.y);
}

void validate_viewport(const Viewport& vp) {
  if (!(vp.xmax > vp.xmin) || !(vp.ymax > vp.ymin) || !std::isfinite(vp.width()) || !std::isfinite(vp.height())) {
    throw DomainError("invalid viewport");
  }
}

class Raster {
 public:
  Raster(int width, int height)
      : width_(width), height_(height), pixels_(static_cast<std::size_t>(width) * height * 3, kWhite) {}

  void set(long x, long y) {
    if (x < 0 || y < 0 || x >= width_ || y >= height_) {
      return;
    }
    const auto idx = (static_cast<std::size_t>(y) * width_ + static_cast<std::size_t>(x)) * 3;
    pixels_[idx] = pixels_[idx + 1] = pixels_[idx + 2] = kBlack;
  }

  void disc(long cx, long cy, int radius) {
    const long r = radius;
    for (long dy = -r; dy <= r; ++dy) {
      for (long dx = -r; dx <= r; ++dx) {
        if (dx * dx + dy * dy <= r * r) {
          set(cx + dx, cy + dy);
        }
      }
    }
  }

  void line(long x0, long y0, long x1, long y1) {
    const long dx = std::labs(x1 - x0);
    const long dy = -std::labs(y1 - y0);
    const long sx = x0 < x1 ? 1 : -1;
    const long sy = y0 < y1 ? 1 : -1;
    long err = dx + dy;
    while (true) {
      set(x0, y0);
      if (x0 == x1 && y0 == y1) {
        break;
      }
      const long e2 = 2 * err;
      if (e2 >= dy) {
        err += dy;
        x0 += sx;
      }
      if (e2 <= dx) {
        err += dx;
        y0 += sy;
      }
    }
  }

  std::vector<std::uint8_t> encode() const {
    const std::string header = "P6\n" + std::to_string(width_) + " " + std::to_string(height_) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), pixels_.begin(), pixels_.end());
    return out;
  }

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

// Pixel index along one axis. The far canvas edge maps onto the last pixel.
long to_pixel(double c, int extent) {
  constexpr double kLimit = 1 << 20;
  c = std::clamp(c, -kLimit, kLimit);
  const long p = static_cast<long>(std::floor(c));
  return p == extent ? extent - 1 : p;
}

}  // namespace

void RenderStyle::validate() const {
  if (canvas_width < 16 || canvas_height < 16) {
    throw DomainError("canvas dimensions must be at least 16 pixels");
  }
  if (!(margin >= 0.0 && margin <= 0.5)) {
    throw DomainError("margin must be in [0, 0.5]");
  }
  if (point_radius < 0) {
    throw DomainError("point radius must be non-negative");
  }
  if (stroke_width < 1) {
    throw DomainError("stroke width must be at least 1");
  }
  if (std::isnan(clip_threshold)) {
    throw DomainError("clip threshold must be a number");
  }
}

Viewport fit_viewport(const PointPath& g, const RenderStyle& style) {
  style.validate();
  bool any = false;
  Viewport vp;
  for (const Complex z : g.points()) {
    if (is_clipped(z, style)) {
      continue;
    }
    if (!any) {
      vp = {z.re, z.re, z.im, z.im};
      any = true;
      continue;
    }
    vp.xmin = std::min(vp.xmin, z.re);
    vp.xmax = std::max(vp.xmax, z.re);
    vp.ymin = std::min(vp.ymin, z.im);
    vp.ymax = std::max(vp.ymax, z.im);
  }
  if (!any) {
    throw DomainError("all points clipped");
  }

  auto pad_degenerate = [](double& lo, double& hi) {
    if (hi - lo == 0.0) {
      const double mid = lo;
      lo = mid - 0.5;
      hi = mid + 0.5;
    }
  };
  pad_degenerate(vp.xmin, vp.xmax);
  pad_degenerate(vp.ymin, vp.ymax);

  const double mx = style.margin * vp.width();
  const double my = style.margin * vp.height();
  vp.xmin -= mx;
  vp.xmax += mx;
  vp.ymin -= my;
  vp.ymax += my;

  const double aspect = static_cast<double>(style.canvas_width) / style.canvas_height;
  if (vp.width() / vp.height() < aspect) {
    const double cx = 0.5 * (vp.xmin + vp.xmax);
    const double half = 0.5 * vp.height() * aspect;
    vp.xmin = cx - half;
    vp.xmax = cx + half;
  } else {
    const double cy = 0.5 * (vp.ymin + vp.ymax);
    const double half = 0.5 * vp.width() / aspect;
    vp.ymin = cy - half;
    vp.ymax = cy + half;
  }
  return vp;
}

std::vector<std::vector<Complex>> drawable_runs(const PointPath& g, const RenderStyle& style) {
  std::vector<std::vector<Complex>> runs;
  bool open = false;
  for (const auto& e : g.elements()) {
    const auto* z = std::get_if<Complex>(&e);
    if (z == nullptr || is_clipped(*z, style)) {
      open = false;
      continue;
    }
    if (!open) {
      runs.emplace_back();
      open = true;
    }
    runs.back().push_back(*z);
  }
  return runs;
}

CanvasPoint to_canvas(Complex z, const Viewport& vp, const RenderStyle& style) {
  return {(z.re - vp.xmin) / vp.width() * style.canvas_width,
          (vp.ymax - z.im) / vp.height() * style.canvas_height};
}

std::string render_svg(const PointPath& g, const RenderStyle& style, const Viewport& vp) {
  style.validate();
  validate_viewport(vp);
  const std::string w = std::to_string(style.canvas_width);
  const std::string h = std::to_string(style.canvas_height);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
         "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"#ffffff\"/>\n";

  if (style.mode == RenderMode::Scatter) {
    const std::string r = std::to_string(style.point_radius);
    out += "<g fill=\"#000000\" stroke=\"none\">\n";
    for (const Complex z : g.points()) {
      if (is_clipped(z, style)) {
        continue;
      }
      const CanvasPoint p = to_canvas(z, vp, style);
      out += "<circle cx=\"";
      append_coord(out, p.x);
      out += "\" cy=\"";
      append_coord(out, p.y);
      out += "\" r=\"" + r + "\"/>\n";
    }
  } else {
    out += "<g fill=\"none\" stroke=\"#000000\" stroke-width=\"" + std::to_string(style.stroke_width) +
           "\" stroke-linejoin=\"round\">\n";
    for (const auto& run : drawable_runs(g, style)) {
      if (run.size() < 2) {
        continue;
      }
      out += "<polyline points=\"";
      for (std::size_t i = 0; i < run.size(); ++i) {
        if (i > 0) {
          out.push_back(' ');
        }
        append_pair(out, to_canvas(run[i], vp, style));
      }
      out += "\"/>\n";
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::vector<std::uint8_t> render_ppm(const PointPath& g, const RenderStyle& style, const Viewport& vp) {
  style.validate();
  validate_viewport(vp);
  Raster raster(style.canvas_width, style.canvas_height);
  auto pixel = [&](Complex z) {
    const CanvasPoint p = to_canvas(z, vp, style);
    return std::pair{to_pixel(p.x, style.canvas_width), to_pixel(p.y, style.canvas_height)};
  };

  if (style.mode == RenderMode::Scatter) {
    for (const Complex z : g.points()) {
      if (!is_clipped(z, style)) {
        const auto [x, y] = pixel(z);
        raster.disc(x, y, style.point_radius);
      }
    }
  } else {
    for (const auto& run : drawable_runs(g, style)) {
      for (std::size_t i = 1; i < run.size(); ++i) {
        const auto [x0, y0] = pixel(run[i - 1]);
        const auto [x1, y1] = pixel(run[i]);
        raster.line(x0, y0, x1, y1);
      }
    }
  }
  return raster.encode();
}

}  // namespace sierpinski
