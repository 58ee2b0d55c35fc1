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

#include "steer/io.hpp"

#include "gtest/gtest.h"

using namespace steer;
using io::json;

TEST(io, full_state_round_trip) {
  const TwoQubitState s{{0.1, 0.0, -0.2}, {0.0, 0.3, 0.0}, diag3({-0.5, 0.25, -0.1})};
  const TwoQubitState r = io::state_from_json(io::to_json(s));
  ASSERT_EQ(r.a, s.a);
  ASSERT_EQ(r.b, s.b);
  ASSERT_EQ(r.t, s.t);
}

TEST(io, tstate_shorthand) {
  const TwoQubitState s = io::state_from_json(json::parse(R"({"t": [-0.5, -0.4, 0.3]})"));
  ASSERT_TRUE(s.is_tstate());
  ASSERT_EQ(s.t, diag3({-0.5, -0.4, 0.3}));
}

TEST(io, row_major_t) {
  const TwoQubitState s =
      io::state_from_json(json::parse(R"({"T": [[0, 0.1, 0], [0, 0, 0], [0, 0, 0]]})"));
  ASSERT_EQ(s.t[0][1], 0.1);
  ASSERT_EQ(s.t[1][0], 0.0);
  ASSERT_EQ(s.a, Vec3{});
}

TEST(io, malformed_states_rejected) {
  ASSERT_THROW(io::state_from_json(json::parse(R"({"t": [1, 2]})")), std::invalid_argument);
  ASSERT_THROW(io::state_from_json(json::parse(R"({"a": [0, 0, 0]})")), std::invalid_argument);
  ASSERT_THROW(io::state_from_json(json::parse(R"({"t": [0, 0, 0], "a": [0, 0, 0]})")),
               std::invalid_argument);
  ASSERT_THROW(io::state_from_json(json::parse(R"({"t": ["x", 0, 0]})")), std::invalid_argument);
  ASSERT_THROW(io::state_from_json(json::parse(R"([1, 2, 3])")), std::invalid_argument);
}

TEST(io, verdict_fields) {
  const json j = io::to_json(classify(TState{{-0.3, -0.3, -0.85}}.to_state()));
  ASSERT_EQ(j["gap"], true);
  ASSERT_EQ(j["separable"], "no");
  ASSERT_TRUE(j["margins"]["boundary_g"].is_number());
  ASSERT_EQ(j["conjectured_steerable"], true);
  const json k = io::to_json(classify({{0.1, 0, 0}, {}, zeros3()}));
  ASSERT_TRUE(k["margins"]["boundary_g"].is_null());
  ASSERT_TRUE(k["conjectured_steerable"].is_null());
}

TEST(io, directions_both_layouts) {
  ASSERT_EQ(io::directions_from_json(json::parse("[[0,0,1],[1,0,0]]")).size(), 2u);
  ASSERT_EQ(io::directions_from_json(json::parse(R"({"directions": [[0,1,0]]})"))[0],
            (Vec3{0, 1, 0}));
}
