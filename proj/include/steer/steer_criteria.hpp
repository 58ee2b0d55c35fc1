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

// Steerability classification.
//
// Necessary condition for steering by Alice (T-states): the state lies beyond
// the LHS boundary, g < 0. Sufficient conditions (any two-qubit state):
//
//   linear     c1 + c2 + c3 > (3/2) sqrt(1 - |b|^2), c_i singular values of
//              the covariance matrix T - a b^T;
//   nonlinear  |t1| + |t2| > (2/pi) [sqrt((1+a3)^2 - (t3+b3)^2)
//                                  + sqrt((1-a3)^2 - (t3-b3)^2)]
//              in the canonical frame, for some choice of axis "3".

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <utility>

#include "steer/ellipsoid.hpp"
#include "steer/lhs_boundary.hpp"
#include "steer/linalg.hpp"
#include "steer/qstate.hpp"
#include "steer/specfun.hpp"

namespace steer {

enum class Tri { kNo, kYes, kUnknown };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::kYes:
      return "yes";
    case Tri::kNo:
      return "no";
    default:
      return "unknown";
  }
}

/// Sufficient-condition margins must exceed this to count as a proof.
inline constexpr double kMarginProofTol = 1e-12;

struct Margins {
  std::optional<double> boundary_g;  // T-states with full rank only
  double linear = 0.0;
  double nonlinear = 0.0;
};

struct SteerabilityVerdict {
  bool tstate = false;
  Tri separable = Tri::kUnknown;
  bool nonsteerable_proven = false;
  bool steerable_proven = false;
  bool gap = false;
  // Non-rigorous: g < 0, i.e. beyond the LHS boundary. Only for full-rank
  // T-states.
  std::optional<bool> conjectured_steerable;
  Margins margins;
};

/// c1 + c2 + c3 - (3/2) sqrt(1 - |b|^2); positive proves steerability.
inline double linear_margin(const TwoQubitState& s) {
  const Vec3 c = singular_values(covariance_matrix(s));
  const double b2 = dot(s.b, s.b);
  return c[0] + c[1] + c[2] - 1.5 * std::sqrt(std::max(0.0, 1.0 - b2));
}

namespace detail {

inline double nonlinear_axis_margin(const Vec3& a, const Vec3& b, const Vec3& d, int k) {
  const int i = (k + 1) % 3, j = (k + 2) % 3;
  const double plus = (1 + a[k]) * (1 + a[k]) - (d[k] + b[k]) * (d[k] + b[k]);
  const double minus = (1 - a[k]) * (1 - a[k]) - (d[k] - b[k]) * (d[k] - b[k]);
  // negative arguments only arise from rounding on valid states
  return std::abs(d[i]) + std::abs(d[j]) -
         2.0 / kPi * (std::sqrt(std::max(0.0, plus)) + std::sqrt(std::max(0.0, minus)));
}

}  // namespace detail

/// Nonlinear inequality evaluated in the canonical diagonal frame and
/// maximised over the three axis roles; positive proves steerability.
inline double nonlinear_margin(const TwoQubitState& s) {
  const CanonicalForm cf = canonical_form(s);
  double best = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < 3; ++k) {
    best = std::max(best, detail::nonlinear_axis_margin(cf.a_loc, cf.b_loc, cf.d, k));
  }
  return best;
}

/// max over cyclic permutations of f(s1,s2,s3) = s1 + s2 - (4/pi) sqrt(1 - s3^2).
inline double tstate_nonlinear_margin(const TState& ts) {
  double best = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < 3; ++k) {
    best = std::max(best, detail::nonlinear_axis_margin(Vec3{}, Vec3{}, ts.t, k));
  }
  return best;
}

inline SteerabilityVerdict classify(const TwoQubitState& input) {
  const TwoQubitState s = make_state(input.a, input.b, input.t);
  SteerabilityVerdict v;
  v.margins.linear = linear_margin(s);
  v.margins.nonlinear = nonlinear_margin(s);
  v.steerable_proven = v.margins.linear > kMarginProofTol ||
                       v.margins.nonlinear > kMarginProofTol;

  if (s.a == Vec3{} && s.b == Vec3{}) {
    v.tstate = true;
    const TState ts{canonical_form(s).d};
    const bool separable = tstate_separable(ts);
    v.separable = separable ? Tri::kYes : Tri::kNo;
    v.nonsteerable_proven = separable;
    if (ts.full_rank()) {
      const double g = boundary_value(ts).g;
      v.margins.boundary_g = g;
      v.conjectured_steerable = g < 0.0;
      v.nonsteerable_proven = v.nonsteerable_proven || g >= 0.0;
    }
  } else {
    v.separable = ppt_separable(s) ? Tri::kYes : Tri::kNo;
    v.nonsteerable_proven = v.separable == Tri::kYes;
  }
  v.gap = !v.nonsteerable_proven && !v.steerable_proven;
  return v;
}

/// Largest root s3 in [floor, 1] of g(s1, s2, s3) = 0 by bracketing
/// bisection; empty when g has no sign change there.
inline std::optional<double> boundary_s3(double s1, double s2, double tol = 1e-10,
                                         double floor = 1e-4) {
  const auto g = [&](double s3) {
    return boundary_value(TState{{s1, s2, s3}}).g;
  };
  constexpr int kScan = 64;
  double hi = 1.0, g_hi = g(hi);
  if (g_hi == 0.0) return hi;
  for (int k = kScan - 1; k >= 0; --k) {
    const double lo = floor + (1.0 - floor) * k / kScan;
    const double g_lo = g(lo);
    if (g_lo == 0.0) return lo;
    if ((g_lo > 0) != (g_hi > 0)) {
      double a = lo, b = hi, ga = g_lo;
      while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        const double gm = g(mid);
        if (gm == 0.0) return mid;
        if ((gm > 0) == (ga > 0)) {
          a = mid;
          ga = gm;
        } else {
          b = mid;
        }
      }
      return 0.5 * (a + b);
    }
    hi = lo;
    g_hi = g_lo;
  }
  return std::nullopt;
}

/// Boundary on the slice s1 = s2 in closed form, with u = s3 / s1:
///   u < 1:  s3 = [1 + arctan(sqrt(u^-2 - 1)) / (u^2 sqrt(u^-2 - 1))]^-1
///   u > 1:  s3 = [1 - sqrt(1 - u^-2) / (2(u^2 - 1))
///                 * ln(|1 - sqrt(1 - u^-2)| / (1 + sqrt(1 - u^-2)))]^-1
/// Returns (s1, s3).
inline std::pair<double, double> boundary_symmetric(double u) {
  if (!(u > 0.0)) throw std::invalid_argument("boundary_symmetric: u must be positive");
  double s3 = 0.5;
  if (u < 1.0) {
    const double r = std::sqrt(1.0 / (u * u) - 1.0);
    s3 = 1.0 / (1.0 + std::atan(r) / (u * u * r));
  } else if (u > 1.0) {
    const double r = std::sqrt(1.0 - 1.0 / (u * u));
    // -ln((1-r)/(1+r)) / 2 = atanh(r); u^2 - 1 = u^2 r^2
    s3 = 1.0 / (1.0 + std::atanh(r) / (u * u * r));
  }
  return {s3 / u, s3};
}

/// Smallest s3 on the slice s1 = s2 = x above which the nonlinear
/// sufficient condition holds, clamped to [0, 1].
inline double nonlinear_slice_s3(double x) {
  const double h = kPi * x / 2.0;
  const double via_pair = h >= 1.0 ? 0.0 : std::sqrt(1.0 - h * h);
  const double via_mixed = 4.0 / kPi * std::sqrt(std::max(0.0, 1.0 - x * x)) - x;
  return std::clamp(std::min(via_pair, via_mixed), 0.0, 1.0);
}

}  // namespace steer
