#include "sierpinski/csv.hpp"

#include <charconv>
#include <cmath>
#include <vector>

#include "sierpinski/error.hpp"

namespace sierpinski {
namespace {

void append_number(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  out.append(buf, res.ptr);
}

double parse_number(std::string_view field, std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(v)) {
    throw ParseError(line, "malformed number '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

std::string write_csv(const PointPath& g) {
  std::string out;
  out.reserve(g.size() * 40);
  for (const auto& e : g.elements()) {
    if (const auto* z = std::get_if<Complex>(&e)) {
      append_number(out, z->re);
      out.push_back(',');
      append_number(out, z->im);
    }
    out.push_back('\n');
  }
  return out;
}

PointPath read_csv(std::string_view text) {
  std::vector<PathElement> elements;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }

    if (line.empty()) {
      if (elements.empty() || is_pen_up(elements.back())) {
        throw ParseError(line_no, "pen-up must follow a point");
      }
      elements.emplace_back(PenUp{});
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError(line_no, "expected 're,im'");
    }
    const double re = parse_number(line.substr(0, comma), line_no);
    const double im = parse_number(line.substr(comma + 1), line_no);
    elements.emplace_back(Complex{re, im});
  }
  if (!elements.empty() && is_pen_up(elements.back())) {
    throw ParseError(line_no, "path may not end with a pen-up");
  }
  return PointPath(std::move(elements));
}

}  // namespace sierpinski
