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

#include "steer/ellipsoid.hpp"

#include "gtest/gtest.h"

#include "test_support.hpp"

using namespace steer;
using steer::testing::random_rotation;
using steer::testing::random_state;

TEST(ellipsoid, steered_state_tstate) {
  const auto r = steered_state(TState{{0.3, -0.4, -0.6}}.to_state(), {0, 0, 1});
  ASSERT_NEAR(r.probability, 0.5, 1e-15);
  ASSERT_NEAR(norm(r.bloch - Vec3{0, 0, -0.6}), 0.0, 1e-15);
}

TEST(ellipsoid, steered_state_product) {
  const Vec3 a{0, 0, 0.5}, b{0.1, 0, 0};
  const TwoQubitState s{a, b, outer(a, b)};
  CounterRng rng(1);
  for (int k = 0; k < 20; ++k) {
    const auto r = steered_state(s, uniform_unit_vector(rng));
    ASSERT_LT(norm(r.bloch - b), 1e-15);
  }
}

TEST(ellipsoid, steered_state_singlet) {
  const auto r = steered_state(TState{{-1, -1, -1}}.to_state(), {1, 0, 0});
  ASSERT_NEAR(r.probability, 0.5, 1e-15);
  ASSERT_LT(norm(r.bloch - Vec3{-1, 0, 0}), 1e-15);
}

TEST(ellipsoid, steered_state_degenerate_outcome) {
  const Vec3 a{0, 0, 1};
  const TwoQubitState s{a, {}, zeros3()};
  ASSERT_THROW(steered_state(s, {0, 0, -1}), DegenerateOutcome);
}

TEST(ellipsoid, tstate_ellipsoid) {
  const auto el = steering_ellipsoid(TState{{0.3, -0.5, 0.2}}.to_state());
  ASSERT_LT(norm(el.center), 1e-15);
  ASSERT_LT(max_abs_diff(el.q, diag3({0.09, 0.25, 0.04})), 1e-15);
  ASSERT_NEAR(el.semiaxes[0], 0.5, 1e-14);
  ASSERT_NEAR(el.semiaxes[1], 0.3, 1e-14);
  ASSERT_NEAR(el.semiaxes[2], 0.2, 1e-14);
  ASSERT_NEAR(det(el.orientation), 1.0, 1e-14);
}

TEST(ellipsoid, product_state_is_a_point) {
  const Vec3 a{0.2, 0.1, -0.3}, b{0.1, 0.5, 0.2};
  const auto el = steering_ellipsoid({a, b, outer(a, b)});
  ASSERT_LT(max_abs_diff(el.q, zeros3()), 1e-15);
  ASSERT_LT(norm(el.center - b), 1e-15);
  for (double s : el.semiaxes) ASSERT_NEAR(s, 0.0, 1e-7);
}

TEST(ellipsoid, singlet_is_bloch_ball) {
  const auto el = steering_ellipsoid(TState{{-1, -1, -1}}.to_state());
  ASSERT_LT(max_abs_diff(el.q, identity3()), 1e-15);
  ASSERT_LT(norm(el.center), 1e-15);
}

TEST(ellipsoid, alice_bloch_unit) {
  const Vec3 a{0, 1, 0};
  ASSERT_THROW(steering_ellipsoid({a, {}, zeros3()}), AliceBlochUnit);
}

TEST(ellipsoid, steered_states_lie_on_surface) {
  CounterRng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const TwoQubitState s = random_state(rng);
    const auto el = steering_ellipsoid(s);
    // random states have full-rank Q; check with the inverse in the eigenframe
    for (int k = 0; k < 100; ++k) {
      const auto st = steered_state(s, uniform_unit_vector(rng));
      const Vec3 y = transpose(el.orientation) * (st.bloch - el.center);
      double form = 0.0;
      for (int i = 0; i < 3; ++i) form += y[i] * y[i] / (el.semiaxes[i] * el.semiaxes[i]);
      ASSERT_NEAR(form, 1.0, 1e-9);
      ASSERT_LE(norm(st.bloch), 1.0 + 1e-12);
      ASSERT_GE(st.probability, 0.0);
      ASSERT_LE(st.probability, 1.0);
    }
    ASSERT_LE(norm(el.center), 1.0 + 1e-12);
    ASSERT_LE(el.semiaxes[0], 1.0 + 1e-12);
  }
}

TEST(ellipsoid, semiaxes_invariant_under_local_rotations) {
  CounterRng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const TwoQubitState s = random_state(rng);
    const TwoQubitState r = rotate_locally(s, random_rotation(rng), random_rotation(rng));
    const Vec3 x = steering_ellipsoid(s).semiaxes, y = steering_ellipsoid(r).semiaxes;
    for (int k = 0; k < 3; ++k) ASSERT_NEAR(x[k], y[k], 1e-10);
  }
}

TEST(ellipsoid, surface_radius_examples) {
  const TState ts{{0.3, -0.4, 0.5}};
  ASSERT_NEAR(surface_radius(ts, 0.0, 1.3), 0.5, 1e-15);
  ASSERT_NEAR(surface_radius(ts, kPi / 2, 0.0), 0.3, 1e-15);
  const Vec3 n = unit_direction(kPi / 3, kPi / 5);
  const double direct = 1.0 / std::sqrt(n[0] * n[0] / 0.09 + n[1] * n[1] / 0.16 + n[2] * n[2] / 0.25);
  ASSERT_NEAR(surface_radius(ts, kPi / 3, kPi / 5), direct, 1e-15);
  ASSERT_THROW(surface_radius(TState{{0.3, 0.0, 0.5}}, 0.1, 0.1), DegenerateEllipsoid);
}

TEST(ellipsoid, surface_radius_traces_ellipsoid_surface) {
  // The point r(theta, phi) n lies on {x : x^T T^-2 x = 1}.
  CounterRng rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec3 t{steer::testing::uniform(rng, 0.05, 1), steer::testing::uniform(rng, 0.05, 1),
                 steer::testing::uniform(rng, 0.05, 1)};
    const double th = steer::testing::uniform(rng, 0, kPi), ph = steer::testing::uniform(rng, 0, 2 * kPi);
    const Vec3 x = surface_radius(TState{t}, th, ph) * unit_direction(th, ph);
    double form = 0.0;
    for (int i = 0; i < 3; ++i) form += x[i] * x[i] / (t[i] * t[i]);
    ASSERT_NEAR(form, 1.0, 1e-12);
  }
}

TEST(ellipsoid, tstate_separable_examples) {
  ASSERT_TRUE(tstate_separable(TState{{1.0 / 3, 1.0 / 3, 1.0 / 3}}));
  ASSERT_FALSE(tstate_separable(TState{{-1, -1, -1}}));
  ASSERT_TRUE(tstate_separable(TState{{0.2, 0.2, -0.2}}));
}

TEST(ellipsoid, octahedron_volume_at_symmetric_point) {
  const auto el = steering_ellipsoid(TState{{1.0 / 3, 1.0 / 3, 1.0 / 3}}.to_state());
  ASSERT_NEAR(el.volume(), 4.0 * kPi / 3.0 / 27.0, 1e-14);
}
