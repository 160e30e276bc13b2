#include "sierpinski/path.hpp"

#include <algorithm>

#include "sierpinski/error.hpp"

namespace sierpinski {

PointPath::PointPath(std::vector<PathElement> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) {
    return;
  }
  if (is_pen_up(elements_.front()) || is_pen_up(elements_.back())) {
    throw DomainError("point path may not start or end with a pen-up");
  }
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    if (is_pen_up(elements_[i]) && is_pen_up(elements_[i - 1])) {
      throw DomainError("point path may not contain consecutive pen-ups");
    }
  }
}

PointPath PointPath::from_points(std::span<const Complex> points) {
  PointPath out;
  out.elements_.assign(points.begin(), points.end());
  return out;
}

void PointPath::add_point(Complex z) {
  if (pending_pen_up_) {
    elements_.emplace_back(PenUp{});
    pending_pen_up_ = false;
  }
  elements_.emplace_back(z);
}

void PointPath::lift_pen() {
  if (!elements_.empty()) {
    pending_pen_up_ = true;
  }
}

void PointPath::append(const PointPath& other) {
  if (other.empty()) {
    return;
  }
  if (pending_pen_up_) {
    elements_.emplace_back(PenUp{});
    pending_pen_up_ = false;
  }
  elements_.insert(elements_.end(), other.elements_.begin(), other.elements_.end());
}

std::size_t PointPath::point_count() const {
  return static_cast<std::size_t>(
      std::count_if(elements_.begin(), elements_.end(), [](const PathElement& e) { return !is_pen_up(e); }));
}

std::vector<Complex> PointPath::points() const {
  std::vector<Complex> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) {
    if (const auto* z = std::get_if<Complex>(&e)) {
      out.push_back(*z);
    }
  }
  return out;
}

std::vector<std::vector<Complex>> PointPath::runs() const {
  std::vector<std::vector<Complex>> out;
  if (elements_.empty()) {
    return out;
  }
  out.emplace_back();
  for (const auto& e : elements_) {
    if (const auto* z = std::get_if<Complex>(&e)) {
      out.back().push_back(*z);
    } else {
      out.emplace_back();
    }
  }
  return out;
}

PointPath PointPath::drop_points(const std::vector<bool>& drop) const {
  if (drop.size() != elements_.size()) {
    throw DomainError("drop mask length does not match path length");
  }
  PointPath out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto* z = std::get_if<Complex>(&elements_[i]);
    if (z == nullptr || drop[i]) {
      out.lift_pen();
    } else {
      out.add_point(*z);
    }
  }
  out.pending_pen_up_ = false;
  return out;
}

}  // namespace sierpinski
