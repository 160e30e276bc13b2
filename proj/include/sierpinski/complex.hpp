#pragma once

#include <cmath>
#include <string>

namespace sierpinski {

/// A point of the z-plane. Values produced by this library always have
/// finite components; operations that would leave the finite range throw
/// NumericError instead.
struct Complex {
  double re = 0.0;
  double im = 0.0;

  constexpr Complex() = default;
  constexpr Complex(double real, double imag = 0.0) : re(real), im(imag) {}

  constexpr Complex& operator+=(Complex rhs) {
    re += rhs.re;
    im += rhs.im;
    return *this;
  }
  constexpr Complex& operator-=(Complex rhs) {
    re -= rhs.re;
    im -= rhs.im;
    return *this;
  }
  constexpr Complex& operator*=(Complex rhs) {
    const double r = re * rhs.re - im * rhs.im;
    im = re * rhs.im + im * rhs.re;
    re = r;
    return *this;
  }

  friend constexpr Complex operator+(Complex a, Complex b) { return a += b; }
  friend constexpr Complex operator-(Complex a, Complex b) { return a -= b; }
  friend constexpr Complex operator*(Complex a, Complex b) { return a *= b; }
  friend constexpr Complex operator*(double s, Complex z) { return {s * z.re, s * z.im}; }
  friend constexpr Complex operator*(Complex z, double s) { return {z.re * s, z.im * s}; }
  friend constexpr Complex operator/(Complex z, double s) { return {z.re / s, z.im / s}; }
  friend constexpr Complex operator-(Complex z) { return {-z.re, -z.im}; }

  friend constexpr bool operator==(Complex, Complex) = default;
};

inline constexpr Complex kI{0.0, 1.0};

/// Positive rational exponent num/den.
struct Rational {
  long num = 1;
  long den = 1;

  constexpr double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend constexpr bool operator==(Rational, Rational) = default;
};

inline double modulus(Complex z) { return std::hypot(z.re, z.im); }

inline bool is_finite(Complex z) { return std::isfinite(z.re) && std::isfinite(z.im); }

// Throws NumericError mentioning `what` when z has a non-finite component.
Complex require_finite(Complex z, const char* what);

/// Principal argument in (-pi, pi]. Throws DomainError for z == 0.
double principal_arg(Complex z);

/// z^p on the principal branch: |z|^p * exp(i p Arg z). 0^p is 0.
/// Throws DomainError for p <= 0.
Complex principal_power(Complex z, Rational p);

/// e^z.
Complex cexp(Complex z);

/// z^n by repeated squaring, n >= 0. No branch is involved.
Complex integer_power(Complex z, int n);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double theta);

/// "(re, im)" with full precision, for error messages.
std::string to_string(Complex z);

}  // namespace sierpinski
