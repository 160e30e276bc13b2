#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "sierpinski/complex.hpp"
#include "sierpinski/ifs.hpp"
#include "sierpinski/path.hpp"

namespace sierpinski {

inline constexpr int kMaxMonomialExponent = 12;

/// Elementwise transform applied to a generated point set: the identity,
/// z^n for 1 <= n <= 12, or exp(z^(num/den)) on the principal branch.
class PostMap {
 public:
  struct Identity {
    friend constexpr bool operator==(Identity, Identity) = default;
  };
  struct MonomialPower {
    int n;
    friend constexpr bool operator==(MonomialPower, MonomialPower) = default;
  };
  struct ExpRationalPower {
    Rational p;  // lowest terms
    friend constexpr bool operator==(ExpRationalPower, ExpRationalPower) = default;
  };
  using Variant = std::variant<Identity, MonomialPower, ExpRationalPower>;

  PostMap() = default;

  static PostMap identity();
  static PostMap monomial(int n);
  /// Reduces num/den to lowest terms; both must be positive.
  static PostMap exp_rational(long num, long den);

  /// Accepts "identity", "pow:N" and "exppow:NUM/DEN".
  static PostMap parse(std::string_view text);

  const Variant& kind() const { return kind_; }
  bool is_identity() const { return std::holds_alternative<Identity>(kind_); }

  /// Throws NumericError when the result leaves the finite range.
  Complex operator()(Complex z) const;

  std::string name() const;

  friend bool operator==(const PostMap&, const PostMap&) = default;

 private:
  explicit PostMap(Variant v) : kind_(v) {}
  Variant kind_{Identity{}};
};

/// Applies `f` to every point of `g`; pen-ups pass through. In faithful mode
/// the sentinel images are mapped like any other point. Throws NumericError
/// naming the first input point whose image is not finite.
PointPath apply_post_map(const PostMap& f, const PointPath& g, BaseMode mode);

/// Smallest and largest principal argument over the nonzero points of `g`.
/// With a sentinel threshold, points whose real part exceeds it are ignored.
/// Throws DomainError if no nonzero point remains.
std::pair<double, double> sector_span(const PointPath& g,
                                      std::optional<double> sentinel_threshold = std::nullopt);

}  // namespace sierpinski
