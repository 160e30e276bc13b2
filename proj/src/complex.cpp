#include "sierpinski/complex.hpp"

#include <charconv>
#include <numbers>

#include "sierpinski/error.hpp"

namespace sierpinski {

Complex require_finite(Complex z, const char* what) {
  if (!is_finite(z)) {
    throw NumericError(std::string("non-finite result in ") + what);
  }
  return z;
}

double principal_arg(Complex z) {
  if (z.re == 0.0 && z.im == 0.0) {
    throw DomainError("argument of zero undefined");
  }
  const double theta = std::atan2(z.im, z.re);
  // atan2 returns -pi for a negative real with im == -0.0.
  return theta == -std::numbers::pi ? std::numbers::pi : theta;
}

Complex principal_power(Complex z, Rational p) {
  if (p.den <= 0 || p.num <= 0) {
    throw DomainError("exponent must be a positive rational");
  }
  if (z.re == 0.0 && z.im == 0.0) {
    return {};
  }
  const double exponent = p.value();
  const double mag = std::pow(modulus(z), exponent);
  const double angle = exponent * principal_arg(z);
  return require_finite({mag * std::cos(angle), mag * std::sin(angle)}, "principal_power");
}

Complex cexp(Complex z) {
  const double mag = std::exp(z.re);
  return require_finite({mag * std::cos(z.im), mag * std::sin(z.im)}, "cexp");
}

Complex integer_power(Complex z, int n) {
  if (n < 0) {
    throw DomainError("integer_power requires a non-negative exponent");
  }
  Complex result{1.0, 0.0};
  Complex base = z;
  while (n > 0) {
    if (n & 1) {
      result *= base;
    }
    n >>= 1;
    if (n > 0) {
      base *= base;
    }
  }
  return require_finite(result, "integer_power");
}

double wrap_angle(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double wrapped = std::remainder(theta, two_pi);  // [-pi, pi]
  if (wrapped <= -std::numbers::pi) {
    wrapped += two_pi;
  }
  return wrapped;
}

std::string to_string(Complex z) {
  char buf[64];
  auto format = [&buf](char* first, double v) {
    return std::to_chars(first, buf + sizeof(buf), v).ptr;
  };
  char* p = buf;
  *p++ = '(';
  p = format(p, z.re);
  *p++ = ',';
  *p++ = ' ';
  p = format(p, z.im);
  *p++ = ')';
  return {buf, p};
}

}  // namespace sierpinski
