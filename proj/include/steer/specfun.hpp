// Copyright 2026 The steerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Elliptic integrals.
//
// Carlson's symmetric forms by the duplication theorem (Carlson 1995):
//
//   R_F(x,y,z) = 1/2 \int_0^inf [(t+x)(t+y)(t+z)]^{-1/2} dt
//   R_D(x,y,z) = 3/2 \int_0^inf [(t+x)(t+y)]^{-1/2} (t+z)^{-3/2} dt
//   R_G(x,y,z) = 1/(4 pi) \int_{S^2} sqrt(x n1^2 + y n2^2 + z n3^2) d^2n
//
// Legendre forms use the parameter convention m = k^2:
//
//   F(phi|m) = sin(phi) R_F(cos^2 phi, 1 - m sin^2 phi, 1)
//   E(phi|m) = F(phi|m) - (m/3) sin^3(phi) R_D(cos^2 phi, 1 - m sin^2 phi, 1)
//
// Complex arguments are supported on the principal branch; the library only
// relies on purely imaginary amplitudes, where every argument of R_F / R_D
// stays on the positive real axis.

#pragma once

#include <algorithm>
#include <cmath>
#include <array>
#include <complex>
#include <limits>
#include <utility>

#include "steer/errors.hpp"
#include "steer/linalg.hpp"

namespace steer {

using Complex = std::complex<double>;

namespace detail {

inline constexpr double kCarlsonTol = 1e-16;
inline constexpr int kCarlsonMaxIter = 60;

inline bool on_negative_real_axis(Complex z) {
  return z.imag() == 0.0 && z.real() < 0.0;
}

inline double max_abs3(Complex a, Complex b, Complex c) {
  return std::max({std::abs(a), std::abs(b), std::abs(c)});
}

}  // namespace detail

inline Complex carlson_rf(Complex x, Complex y, Complex z) {
  if (detail::on_negative_real_axis(x) || detail::on_negative_real_axis(y) ||
      detail::on_negative_real_axis(z)) {
    throw DomainError("carlson_rf: argument on the negative real axis");
  }
  const int zeros = (x == 0.0) + (y == 0.0) + (z == 0.0);
  if (zeros > 1) throw DomainError("carlson_rf: more than one zero argument");

  const Complex a0 = (x + y + z) / 3.0;
  Complex a = a0;
  double q = std::pow(3.0 * detail::kCarlsonTol, -1.0 / 6.0) *
             detail::max_abs3(a0 - x, a0 - y, a0 - z);
  double scale = 1.0;  // 4^-m
  for (int it = 0; it < detail::kCarlsonMaxIter; ++it) {
    if (q * scale < std::abs(a)) break;
    const Complex sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const Complex lambda = sx * sy + sy * sz + sz * sx;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
    a = 0.25 * (a + lambda);
    scale *= 0.25;
  }
  // Deviations of the converged arguments from their mean.
  const Complex X = 1.0 - x / a;
  const Complex Y = 1.0 - y / a;
  const Complex Z = -(X + Y);
  const Complex e2 = X * Y - Z * Z;
  const Complex e3 = X * Y * Z;
  return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) /
         std::sqrt(a);
}

inline Complex carlson_rd(Complex x, Complex y, Complex z) {
  if (detail::on_negative_real_axis(x) || detail::on_negative_real_axis(y) ||
      detail::on_negative_real_axis(z)) {
    throw DomainError("carlson_rd: argument on the negative real axis");
  }
  if (z == 0.0) throw DomainError("carlson_rd: z must be nonzero");
  if (x == 0.0 && y == 0.0) throw DomainError("carlson_rd: x and y both zero");

  const Complex a0 = (x + y + 3.0 * z) / 5.0;
  Complex a = a0;
  double q = std::pow(0.25 * detail::kCarlsonTol, -1.0 / 6.0) *
             detail::max_abs3(a0 - x, a0 - y, a0 - z);
  double scale = 1.0;
  Complex sum = 0.0;
  for (int it = 0; it < detail::kCarlsonMaxIter; ++it) {
    if (q * scale < std::abs(a)) break;
    const Complex sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const Complex lambda = sx * sy + sy * sz + sz * sx;
    sum += scale / (sz * (z + lambda));
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
    a = 0.25 * (a + lambda);
    scale *= 0.25;
  }
  const Complex X = 1.0 - x / a;
  const Complex Y = 1.0 - y / a;
  const Complex Z = -(X + Y) / 3.0;
  const Complex xy = X * Y, z2 = Z * Z;
  const Complex e2 = xy - 6.0 * z2;
  const Complex e3 = (3.0 * xy - 8.0 * z2) * Z;
  const Complex e4 = 3.0 * (xy - z2) * z2;
  const Complex e5 = xy * z2 * Z;
  const Complex series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 -
                         3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0;
  return scale * series / (a * std::sqrt(a)) + 3.0 * sum;
}

/// R_G for nonnegative real arguments with at most one zero.
inline double carlson_rg(double x, double y, double z) {
  if (x < 0 || y < 0 || z < 0) throw DomainError("carlson_rg: negative argument");
  // z = middle value keeps (x - z)(y - z) <= 0, so no cancellation.
  std::array<double, 3> v{x, y, z};
  std::sort(v.begin(), v.end());
  x = v[0];
  y = v[2];
  z = v[1];
  if (z == 0.0) return 0.5 * std::sqrt(y);  // two zeros
  const double rf = carlson_rf(x, y, z).real();
  const double rd = carlson_rd(x, y, z).real();
  return 0.5 * (z * rf - (x - z) * (y - z) * rd / 3.0 + std::sqrt(x * y / z));
}

namespace detail {

// Shifts amplitude phi by k*pi so that Re(phi) lies in [-pi/2, pi/2].
inline int reduce_amplitude(Complex& phi) {
  const int k = static_cast<int>(std::floor(phi.real() / kPi + 0.5));
  phi -= static_cast<double>(k) * kPi;
  return k;
}

inline void check_parameter(double m) {
  if (!(m >= 0.0 && m <= 1.0)) {
    throw DomainError("elliptic parameter must lie in [0, 1]");
  }
}

}  // namespace detail

inline double k_complete(double m) {
  detail::check_parameter(m);
  if (m == 1.0) return std::numeric_limits<double>::infinity();
  return carlson_rf(0.0, 1.0 - m, 1.0).real();
}

inline double e_complete(double m) {
  detail::check_parameter(m);
  if (m == 1.0) return 1.0;
  return (carlson_rf(0.0, 1.0 - m, 1.0) - m / 3.0 * carlson_rd(0.0, 1.0 - m, 1.0))
      .real();
}

/// Incomplete integral of the first kind F(phi|m).
inline Complex legendre_f(Complex phi, double m) {
  detail::check_parameter(m);
  const int k = detail::reduce_amplitude(phi);
  if (phi == 0.0 && k == 0) return 0.0;
  const Complex s = std::sin(phi), c = std::cos(phi);
  const Complex delta = 1.0 - m * s * s;
  Complex base = 0.0;
  if (phi != 0.0) {
    if (m == 1.0 && std::abs(phi.real()) == kPi / 2 && phi.imag() == 0.0) {
      throw DomainError("F(pi/2 | 1) diverges");
    }
    base = s * carlson_rf(c * c, delta, 1.0);
  }
  return base + (k != 0 ? 2.0 * k * k_complete(m) : 0.0);
}

/// Incomplete integral of the second kind E(phi|m).
inline Complex legendre_e(Complex phi, double m) {
  detail::check_parameter(m);
  const int k = detail::reduce_amplitude(phi);
  Complex base = 0.0;
  if (phi != 0.0) {
    const Complex s = std::sin(phi), c = std::cos(phi);
    if (m == 1.0 && phi.imag() == 0.0) {
      base = s;  // E(phi|1) = sin(phi) on the principal range
    } else {
      const Complex c2 = c * c, delta = 1.0 - m * s * s;
      base = s * carlson_rf(c2, delta, 1.0) -
             m / 3.0 * s * s * s * carlson_rd(c2, delta, 1.0);
    }
  }
  return base + (k != 0 ? 2.0 * k * e_complete(m) : 0.0);
}

}  // namespace steer
