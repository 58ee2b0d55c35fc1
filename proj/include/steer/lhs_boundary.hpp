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

// Hemisphere integral of the hidden-state density and the boundary of the
// deterministic LHS model for T-states.
//
// For full-rank diagonal T and nonzero v,
//
//   \int_{n.v >= 0} n d^2n / (n^T T^-2 n)^2 = pi |det T| T^2 v / |T v|.
//
// The density P(n) = N_T (n^T T^-2 n)^-2 with response hemispheres
// {n : n^T T^-1 e >= 0} reproduces the steered states T e exactly when
// 2 pi N_T |det T| = 1. Substituting n = T m / |T m| gives
//
//   1/N_T = |det T| \int |T m| d^2m = 4 pi s1 s2 s3 R_G(s1^2, s2^2, s3^2),
//
// so the boundary is the level set R_G(s1^2, s2^2, s3^2) = 1/2.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "steer/errors.hpp"
#include "steer/linalg.hpp"
#include "steer/qstate.hpp"
#include "steer/quadrature.hpp"
#include "steer/specfun.hpp"

namespace steer {

namespace detail {

inline void require_full_rank(const Vec3& t, const char* where) {
  if (t[0] == 0.0 || t[1] == 0.0 || t[2] == 0.0) {
    throw SingularT(std::string(where) + ": correlation matrix is singular");
  }
}

// n^T T^-2 n for T = diag(t)
inline double inverse_quadratic_form(const Vec3& t, const Vec3& n) {
  return n[0] * n[0] / (t[0] * t[0]) + n[1] * n[1] / (t[1] * t[1]) +
         n[2] * n[2] / (t[2] * t[2]);
}

}  // namespace detail

/// pi |det T| T^2 v / |T v| for T = diag(t).
inline Vec3 q_analytic(const Vec3& t, const Vec3& v) {
  detail::require_full_rank(t, "q_analytic");
  if (v == Vec3{}) throw std::invalid_argument("q_analytic: v must be nonzero");
  const Vec3 tv{t[0] * v[0], t[1] * v[1], t[2] * v[2]};
  const double det_abs = std::abs(t[0] * t[1] * t[2]);
  return (kPi * det_abs / norm(tv)) * Vec3{t[0] * tv[0], t[1] * tv[1], t[2] * tv[2]};
}

/// Quadrature of \int_{n.v >= 0} n d^2n / (n^T T^-2 n)^2.
inline Vec3 q_numeric(const Vec3& t, const Vec3& v, const QuadratureSpec& spec = {}) {
  detail::require_full_rank(t, "q_numeric");
  return hemisphere_integral(
      [&](const Vec3& n) {
        const double q = detail::inverse_quadratic_form(t, n);
        return n / (q * q);
      },
      v, spec);
}

/// N_T = 1 / \int (n^T T^-2 n)^-2 d^2n by direct quadrature.
inline double normalization(const Vec3& t, const QuadratureSpec& spec = {}) {
  detail::require_full_rank(t, "normalization");
  const double integral = sphere_integral(
      [&](const Vec3& n) {
        const double q = detail::inverse_quadratic_form(t, n);
        return 1.0 / (q * q);
      },
      spec);
  return 1.0 / integral;
}

/// N_T through the symmetric form 1/N_T = 4 pi s1 s2 s3 R_G(s1^2, s2^2, s3^2).
/// Valid for any positive semiaxes, ties included.
inline double normalization_carlson(const Vec3& t) {
  detail::require_full_rank(t, "normalization_carlson");
  const double a = std::abs(t[0]), b = std::abs(t[1]), c = std::abs(t[2]);
  return 1.0 / (4.0 * kPi * a * b * c * carlson_rg(a * a, b * b, c * c));
}

/// Ingredients of the Legendre-form closed expression for 1/N_T with
/// semiaxes 0 < a < b < c.
struct EllipticParams {
  Complex amplitude;  // i arccsch(a / sqrt(c^2 - a^2))
  double parameter;   // m' = (b^2 - a^2) / (c^2 - a^2)
  double theta;       // arccos(a / c), the real amplitude it maps to
};

inline EllipticParams elliptic_params(double a, double b, double c) {
  const double w = std::sqrt(c * c - a * a);
  return {Complex(0.0, std::asinh(w / a)), (b * b - a * a) / (c * c - a * a),
          std::acos(a / c)};
}

struct ClosedFormResult {
  double n_t;
  double imag_residue;  // |Im| / |Re| of the elliptic combination
};

/// Closed form for N_T with strictly ordered semiaxes s1 < s2 < s3:
///
///   1/N_T = 2 pi a^2 b^2 + 2 pi a b c [E1 sqrt(c^2-a^2) + F1 a^2/sqrt(c^2-a^2)]
///
/// where, with A = i arccsch(a/sqrt(c^2-a^2)) and m' = (b^2-a^2)/(c^2-a^2),
/// F1 = -i F(A|m') and E1 = F1 + b sqrt(c^2-a^2)/(a c) + i E(A|m') are the
/// real integrals F(theta|1-m'), E(theta|1-m') at theta = arccos(a/c)
/// reached through the imaginary-amplitude transformation.
inline ClosedFormResult normalization_closed_form_detail(double s1, double s2,
                                                         double s3) {
  if (!(0.0 < s1 && s1 < s2 && s2 < s3)) {
    throw OrderingViolated("closed form needs 0 < s1 < s2 < s3");
  }
  const double a = s1, b = s2, c = s3;
  const EllipticParams p = elliptic_params(a, b, c);
  const Complex i(0.0, 1.0);
  const double w = std::sqrt(c * c - a * a);
  const Complex f1 = -i * legendre_f(p.amplitude, p.parameter);
  const Complex e1 = f1 + b * w / (a * c) + i * legendre_e(p.amplitude, p.parameter);
  const Complex bracket = e1 * w + f1 * (a * a / w);
  const double residue = std::abs(bracket.imag()) / std::abs(bracket.real());
  if (residue > 1e-9) {
    std::ostringstream msg;
    msg << "elliptic combination has imaginary residue " << residue;
    throw NonRealResult(msg.str());
  }
  const double inv = 2.0 * kPi * a * a * b * b + 2.0 * kPi * a * b * c * bracket.real();
  return {1.0 / inv, residue};
}

inline double normalization_closed_form(double s1, double s2, double s3) {
  return normalization_closed_form_detail(s1, s2, s3).n_t;
}

/// Hidden-state density P(n) = N_T (n^T T^-2 n)^-2 for a full-rank T-state.
struct LhsDensity {
  Vec3 t{};
  double n_t = 0.0;

  /// N_T from the symmetric closed form.
  static LhsDensity make(const Vec3& t) { return {t, normalization_carlson(t)}; }
  /// N_T from direct quadrature.
  static LhsDensity make(const Vec3& t, const QuadratureSpec& spec) {
    return {t, normalization(t, spec)};
  }

  double operator()(const Vec3& n) const {
    const double q = detail::inverse_quadratic_form(t, n);
    return n_t / (q * q);
  }

  /// sup_n P(n) = N_T s_max^4.
  double sup() const {
    const double s = std::max({std::abs(t[0]), std::abs(t[1]), std::abs(t[2])});
    return n_t * s * s * s * s;
  }
};

struct BoundaryResult {
  double g;  // 2 pi N_T |det T| - 1

  /// > 0 on the origin side (LHS model exists), < 0 beyond the surface.
  int sign() const { return (g > 0) - (g < 0); }
};

/// g = 2 pi N_T s1 s2 s3 - 1 = 1 / (2 R_G(s1^2, s2^2, s3^2)) - 1.
inline BoundaryResult boundary_value(const TState& ts) {
  detail::require_full_rank(ts.t, "boundary_value");
  const Vec3 s = ts.semiaxes();
  return {0.5 / carlson_rg(s[0] * s[0], s[1] * s[1], s[2] * s[2]) - 1.0};
}

/// \int sqrt(n^T T^2 n) d^2n; equals 2 pi exactly on the boundary.
inline double surface_integral_check(const TState& ts, const QuadratureSpec& spec = {}) {
  const Vec3 s = ts.semiaxes();
  return sphere_integral(
      [&](const Vec3& n) {
        return std::sqrt(s[0] * s[0] * n[0] * n[0] + s[1] * s[1] * n[1] * n[1] +
                         s[2] * s[2] * n[2] * n[2]);
      },
      spec);
}

}  // namespace steer
