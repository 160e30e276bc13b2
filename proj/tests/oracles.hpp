// Reference computations used by the tests. Nothing here calls into the
// library's algorithms; each oracle recomputes its answer by a separate route.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "sierpinski/complex.hpp"

namespace oracle {

using sierpinski::Complex;

inline std::complex<double> to_std(Complex z) { return {z.re, z.im}; }

// z * z * ... * z, n factors.
inline std::complex<double> repeated_product(Complex z, int n) {
  std::complex<double> acc{1.0, 0.0};
  for (int i = 0; i < n; ++i) {
    acc = acc * to_std(z);
  }
  return acc;
}

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  const double scale = std::abs(want);
  return scale == 0.0 ? std::abs(got) : std::abs(got - want) / scale;
}

inline double rel_err(Complex got, std::complex<double> want) { return rel_err(to_std(got), want); }

// Distance on the circle between two angles, in [0, pi].
inline double angular_distance(double a, double b) {
  const double d = std::fmod(std::abs(a - b), 2.0 * M_PI);
  return std::min(d, 2.0 * M_PI - d);
}

// The explicit vertex formulas written out for iterations 1-3 of the
// midpoint construction, L = 1. Indices follow the listing: z[1][1..3],
// z[2][1..3], and third-iteration triangles 31, 32, 33.
struct ExplicitConstruction {
  std::complex<double> z11, z12, z13;
  std::complex<double> z21, z22, z23;
  std::vector<std::vector<std::complex<double>>> third;  // 3 triangles x 3 vertices

  explicit ExplicitConstruction(double L = 1.0) {
    const std::complex<double> i{0.0, 1.0};
    z11 = 0.0;
    z12 = L;
    z13 = 0.5 * L + i * (std::sqrt(3.0) / 2.0) * L;
    z21 = 0.5 * (z11 + z13);
    z22 = 0.5 * (z11 + z12);
    z23 = 0.5 * (z12 + z13);
    third = {
        {0.5 * (z11 + z21), 0.5 * (z11 + z22), 0.5 * (z22 + z21)},
        {0.5 * (z22 + z23), 0.5 * (z22 + z12), 0.5 * (z12 + z23)},
        {0.5 * (z21 + z13), 0.5 * (z21 + z23), 0.5 * (z13 + z23)},
    };
  }
};

inline bool close(Complex a, Complex b, double tol) {
  return std::abs(a.re - b.re) <= tol && std::abs(a.im - b.im) <= tol;
}
inline bool close(Complex a, std::complex<double> b, double tol) {
  return std::abs(a.re - b.real()) <= tol && std::abs(a.im - b.imag()) <= tol;
}

// Deduplicates within `tol` per coordinate by brute-force comparison.
inline std::vector<Complex> distinct(const std::vector<Complex>& pts, double tol) {
  std::vector<Complex> out;
  for (const Complex p : pts) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](Complex q) { return close(p, q, tol); });
    if (!seen) {
      out.push_back(p);
    }
  }
  return out;
}

// Set equality within `tol`, by exhaustive pairing in both directions.
inline bool same_set(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
  auto covered = [tol](const std::vector<Complex>& from, const std::vector<Complex>& into) {
    return std::all_of(from.begin(), from.end(), [&](Complex p) {
      return std::any_of(into.begin(), into.end(), [&](Complex q) { return close(p, q, tol); });
    });
  };
  return covered(a, b) && covered(b, a);
}

// Barycentric coordinates of p with respect to triangle (a, b, c).
inline std::array<double, 3> barycentric(Complex p, Complex a, Complex b, Complex c) {
  const double det = (b.im - c.im) * (a.re - c.re) + (c.re - b.re) * (a.im - c.im);
  const double l1 = ((b.im - c.im) * (p.re - c.re) + (c.re - b.re) * (p.im - c.im)) / det;
  const double l2 = ((c.im - a.im) * (p.re - c.re) + (a.re - c.re) * (p.im - c.im)) / det;
  return {l1, l2, 1.0 - l1 - l2};
}

inline double segment_distance(Complex p, Complex a, Complex b) {
  const double dx = b.re - a.re;
  const double dy = b.im - a.im;
  double t = ((p.re - a.re) * dx + (p.im - a.im) * dy) / (dx * dx + dy * dy);
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.re - (a.re + t * dx), p.im - (a.im + t * dy));
}

// Distance from p to the closed triangle {0, 1, i}.
inline double distance_to_unit_simplex(Complex p) {
  if (p.re >= 0.0 && p.im >= 0.0 && p.re + p.im <= 1.0) {
    return 0.0;
  }
  const Complex o{0.0, 0.0}, one{1.0, 0.0}, i{0.0, 1.0};
  return std::min({segment_distance(p, o, one), segment_distance(p, one, i), segment_distance(p, i, o)});
}

// Fixed probe set: mt19937_64's output sequence is pinned by the standard,
// and the mapping to [lo, hi) below avoids the implementation-defined
// distribution classes.
inline std::vector<Complex> probe_points(std::size_t count, double lo, double hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&] { return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<Complex> out;
  while (out.size() < count) {
    const Complex z{uniform(), uniform()};
    if (std::hypot(z.re, z.im) > 1e-3) {
      out.push_back(z);
    }
  }
  return out;
}

}  // namespace oracle
