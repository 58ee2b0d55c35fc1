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

// Quantum steering ellipsoid: the set of Bloch vectors Bob's qubit can be
// steered to by Alice's projective measurements.

#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

#include "steer/errors.hpp"
#include "steer/linalg.hpp"
#include "steer/qstate.hpp"

namespace steer {

struct SteeringEllipsoid {
  Vec3 center{};
  Mat3 q{};
  Vec3 semiaxes{};    // descending
  Mat3 orientation{};  // column k is the direction of semiaxes[k]; det = +1

  double volume() const {
    return 4.0 * kPi / 3.0 * semiaxes[0] * semiaxes[1] * semiaxes[2];
  }

  /// Point on the surface for the unit direction u in the ellipsoid frame.
  Vec3 surface_point(const Vec3& u) const {
    return center + orientation * Vec3{semiaxes[0] * u[0], semiaxes[1] * u[1],
                                       semiaxes[2] * u[2]};
  }
};

struct SteeredState {
  double probability;  // p_e = (1 + a.e) / 2
  Vec3 bloch;          // b(e) = (b + T^T e) / (2 p_e)
};

/// Bob's conditional state when Alice projects onto (1 + e.sigma)/2.
inline SteeredState steered_state(const TwoQubitState& s, const Vec3& e) {
  const double p = 0.5 * (1.0 + dot(s.a, e));
  if (p < 1e-14) {
    throw DegenerateOutcome("outcome probability vanishes; e is antipodal to a");
  }
  return {p, (s.b + transpose(s.t) * e) / (2.0 * p)};
}

/// Center c = (b - T^T a)/(1 - a^2) and shape matrix
/// Q = (T^T - b a^T)(1 + a a^T/(1 - a^2))(T - a b^T)/(1 - a^2).
inline SteeringEllipsoid steering_ellipsoid(const TwoQubitState& s) {
  const double a2 = dot(s.a, s.a);
  if (std::sqrt(a2) >= 1.0 - 1e-12) {
    throw AliceBlochUnit("steering ellipsoid undefined for |a| = 1");
  }
  const double g = 1.0 - a2;
  const Mat3 tt = transpose(s.t);
  SteeringEllipsoid el;
  el.center = (s.b - tt * s.a) / g;
  const Mat3 left = tt - outer(s.b, s.a);
  const Mat3 mid = identity3() + (1.0 / g) * outer(s.a, s.a);
  const Mat3 right = s.t - outer(s.a, s.b);
  el.q = (1.0 / g) * (left * mid * right);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const double m = 0.5 * (el.q[i][j] + el.q[j][i]);
      el.q[i][j] = el.q[j][i] = m;
    }

  const auto eig = jacobi_eigen3(el.q);
  // descending order of semiaxes
  for (int k = 0; k < 3; ++k) {
    double lambda = eig.values[2 - k];
    if (lambda < 0.0 && lambda >= -1e-12) lambda = 0.0;
    el.semiaxes[k] = std::sqrt(std::max(lambda, 0.0));
    for (int i = 0; i < 3; ++i) el.orientation[i][k] = eig.vectors[i][2 - k];
  }
  if (det(el.orientation) < 0) {
    set_column(el.orientation, 2, -column(el.orientation, 2));
  }
  return el;
}

/// Distance from the origin to a T-state's ellipsoid surface along
/// n(theta, phi): r = 1/f with
/// f^2 = sin^2 th cos^2 ph / s1^2 + sin^2 th sin^2 ph / s2^2 + cos^2 th / s3^2.
inline double surface_radius(const TState& ts, double theta, double phi) {
  const Vec3 s = ts.semiaxes();
  if (s[0] == 0 || s[1] == 0 || s[2] == 0) {
    throw DegenerateEllipsoid("surface_radius needs all semiaxes nonzero");
  }
  const double st = std::sin(theta), ct = std::cos(theta);
  const double cp = std::cos(phi), sp = std::sin(phi);
  const double f2 = st * st * cp * cp / (s[0] * s[0]) +
                    st * st * sp * sp / (s[1] * s[1]) + ct * ct / (s[2] * s[2]);
  return 1.0 / std::sqrt(f2);
}

/// Separable T-states form the octahedron s1 + s2 + s3 <= 1. The 1e-12
/// slack absorbs rounding from canonical_form on rotated inputs.
inline bool tstate_separable(const TState& ts) {
  const Vec3 s = ts.semiaxes();
  return s[0] + s[1] + s[2] <= 1.0 + 1e-12;
}

inline Vec3 unit_direction(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

}  // namespace steer
