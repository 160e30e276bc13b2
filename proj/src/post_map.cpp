#include "sierpinski/post_map.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "sierpinski/error.hpp"

namespace sierpinski {
namespace {

template <typename Int>
Int parse_int(std::string_view text, std::string_view whole) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw DomainError("malformed post-map '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

PostMap PostMap::identity() { return PostMap{Identity{}}; }

PostMap PostMap::monomial(int n) {
  if (n < 1 || n > kMaxMonomialExponent) {
    throw DomainError("power exponent must be in [1, " + std::to_string(kMaxMonomialExponent) + "], got " +
                      std::to_string(n));
  }
  return PostMap{MonomialPower{n}};
}

PostMap PostMap::exp_rational(long num, long den) {
  if (num <= 0 || den <= 0) {
    throw DomainError("exp-power exponent must be a positive rational");
  }
  const long g = std::gcd(num, den);
  return PostMap{ExpRationalPower{{num / g, den / g}}};
}

PostMap PostMap::parse(std::string_view text) {
  if (text == "identity") {
    return identity();
  }
  if (text.starts_with("pow:")) {
    return monomial(parse_int<int>(text.substr(4), text));
  }
  if (text.starts_with("exppow:")) {
    const auto rest = text.substr(7);
    const auto slash = rest.find('/');
    if (slash == std::string_view::npos) {
      return exp_rational(parse_int<long>(rest, text), 1);
    }
    return exp_rational(parse_int<long>(rest.substr(0, slash), text), parse_int<long>(rest.substr(slash + 1), text));
  }
  throw DomainError("unknown post-map '" + std::string(text) + "'");
}

Complex PostMap::operator()(Complex z) const {
  return std::visit(
      [z](const auto& k) -> Complex {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Identity>) {
          return z;
        } else if constexpr (std::is_same_v<K, MonomialPower>) {
          return integer_power(z, k.n);
        } else {
          return cexp(principal_power(z, k.p));
        }
      },
      kind_);
}

std::string PostMap::name() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Identity>) {
          return "identity";
        } else if constexpr (std::is_same_v<K, MonomialPower>) {
          return "pow:" + std::to_string(k.n);
        } else {
          return "exppow:" + std::to_string(k.p.num) + "/" + std::to_string(k.p.den);
        }
      },
      kind_);
}

PointPath apply_post_map(const PostMap& f, const PointPath& g, BaseMode mode) {
  if (f.is_identity()) {
    return g;
  }
  return g.map_points([&](Complex z) {
    try {
      return f(z);
    } catch (const NumericError&) {
      std::string msg = "numeric overflow applying " + f.name() + " to point " + to_string(z);
      if (mode == BaseMode::Faithful) {
        msg += "; use the structured base or strip sentinels first";
      }
      throw NumericError(msg);
    }
  });
}

std::pair<double, double> sector_span(const PointPath& g, std::optional<double> sentinel_threshold) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (const Complex z : g.points()) {
    if (z.re == 0.0 && z.im == 0.0) {
      continue;
    }
    if (sentinel_threshold && z.re > *sentinel_threshold) {
      continue;
    }
    const double theta = principal_arg(z);
    lo = std::min(lo, theta);
    hi = std::max(hi, theta);
    any = true;
  }
  if (!any) {
    throw DomainError("sector span needs at least one nonzero point");
  }
  return {lo, hi};
}

}  // namespace sierpinski
