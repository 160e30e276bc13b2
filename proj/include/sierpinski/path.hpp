#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "sierpinski/complex.hpp"

namespace sierpinski {

/// Pen-up separator: no segment is drawn across it.
struct PenUp {
  friend constexpr bool operator==(PenUp, PenUp) = default;
};

using PathElement = std::variant<Complex, PenUp>;

inline bool is_pen_up(const PathElement& e) { return std::holds_alternative<PenUp>(e); }

/// Points interleaved with pen-up separators. A path never starts or ends
/// with a PenUp and never holds two in a row.
class PointPath {
 public:
  PointPath() = default;

  /// Throws DomainError if `elements` violates the separator rules.
  explicit PointPath(std::vector<PathElement> elements);

  static PointPath from_points(std::span<const Complex> points);

  void add_point(Complex z);

  /// Requests a separator before the next added point. A no-op on an empty
  /// path or when one is already pending, so the invariant always holds.
  void lift_pen();

  /// Plain concatenation; no separator is inserted.
  void append(const PointPath& other);

  std::span<const PathElement> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const PathElement& operator[](std::size_t i) const { return elements_[i]; }

  std::size_t point_count() const;
  std::size_t pen_up_count() const { return elements_.size() - point_count(); }

  /// All points in order, separators dropped.
  std::vector<Complex> points() const;

  /// Points grouped into maximal PenUp-free runs.
  std::vector<std::vector<Complex>> runs() const;

  /// Applies `f` to every point; separators are kept in place.
  template <typename F>
  PointPath map_points(F&& f) const {
    PointPath out;
    out.elements_.reserve(elements_.size());
    for (const auto& e : elements_) {
      if (const auto* z = std::get_if<Complex>(&e)) {
        out.elements_.emplace_back(f(*z));
      } else {
        out.elements_.emplace_back(PenUp{});
      }
    }
    return out;
  }

  /// Replaces every point whose `drop` flag is set by a separator. `drop`
  /// is indexed by element position and must match size().
  PointPath drop_points(const std::vector<bool>& drop) const;

  friend bool operator==(const PointPath& a, const PointPath& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<PathElement> elements_;
  bool pending_pen_up_ = false;
};

}  // namespace sierpinski
