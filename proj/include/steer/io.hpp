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

// JSON encoding of states, verdicts and reports (nlohmann::json).
//
// State files: {"a":[x,y,z], "b":[x,y,z], "T":[[..],[..],[..]]} with T
// row-major, or the T-state shorthand {"t":[t1,t2,t3]}.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "steer/ellipsoid.hpp"
#include "steer/lhs_sim.hpp"
#include "steer/qstate.hpp"
#include "steer/steer_criteria.hpp"

namespace steer::io {

using nlohmann::json;

inline json to_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

inline json to_json(const Mat3& m) {
  return json::array({to_json(m[0]), to_json(m[1]), to_json(m[2])});
}

inline Vec3 vec3_from_json(const json& j, const char* field) {
  if (!j.is_array() || j.size() != 3) {
    throw std::invalid_argument(std::string(field) + ": expected an array of 3 numbers");
  }
  Vec3 v;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_number()) {
      throw std::invalid_argument(std::string(field) + ": expected numbers");
    }
    v[i] = j[i].get<double>();
  }
  return v;
}

/// Parses either schema. The result is not validated as a density matrix;
/// pass it through make_state for that.
inline TwoQubitState state_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("state: expected a JSON object");
  TwoQubitState s;
  if (j.contains("t")) {
    if (j.contains("T") || j.contains("a") || j.contains("b")) {
      throw std::invalid_argument("state: \"t\" cannot be combined with a, b or T");
    }
    s.t = diag3(vec3_from_json(j.at("t"), "t"));
    return s;
  }
  if (!j.contains("T")) throw std::invalid_argument("state: missing \"T\" or \"t\"");
  const json& t = j.at("T");
  if (!t.is_array() || t.size() != 3) throw std::invalid_argument("T: expected 3 rows");
  for (int r = 0; r < 3; ++r) s.t[r] = vec3_from_json(t[r], "T row");
  if (j.contains("a")) s.a = vec3_from_json(j.at("a"), "a");
  if (j.contains("b")) s.b = vec3_from_json(j.at("b"), "b");
  return s;
}

inline json to_json(const TwoQubitState& s) {
  return {{"a", to_json(s.a)}, {"b", to_json(s.b)}, {"T", to_json(s.t)}};
}

inline json to_json(const SteerabilityVerdict& v) {
  json margins = {{"linear", v.margins.linear}, {"nonlinear", v.margins.nonlinear}};
  margins["boundary_g"] = v.margins.boundary_g ? json(*v.margins.boundary_g) : json(nullptr);
  json out = {{"tstate", v.tstate},
              {"separable", to_string(v.separable)},
              {"nonsteerable_proven", v.nonsteerable_proven},
              {"steerable_proven", v.steerable_proven},
              {"gap", v.gap},
              {"margins", margins}};
  out["conjectured_steerable"] =
      v.conjectured_steerable ? json(*v.conjectured_steerable) : json(nullptr);
  return out;
}

inline json to_json(const SteeringEllipsoid& e) {
  return {{"center", to_json(e.center)},
          {"semiaxes", to_json(e.semiaxes)},
          {"orientation", to_json(e.orientation)},
          {"volume", e.volume()}};
}

inline json to_json(const SimulationReport& r) {
  json recs = json::array();
  for (const auto& d : r.records) {
    recs.push_back({{"e", to_json(d.e)},
                    {"p_hat", d.p_hat},
                    {"p_std_err", d.p_std_err},
                    {"p_exact", d.p_exact},
                    {"b_hat", to_json(d.b_hat)},
                    {"b_std_err", to_json(d.b_std_err)},
                    {"b_exact", to_json(d.b_exact)},
                    {"cond_hat", to_json(d.cond_hat)},
                    {"cond_std_err", to_json(d.cond_std_err)},
                    {"cond_exact", to_json(d.cond_exact)}});
  }
  return {{"t", to_json(r.t)},
          {"seed", r.seed},
          {"count", r.count},
          {"mixing_weight", r.mixing_weight},
          {"acceptance_rate", r.acceptance_rate},
          {"records", recs}};
}

inline json to_json(const VerifyReport& r) {
  json recs = json::array();
  for (const auto& d : r.records) {
    recs.push_back({{"e", to_json(d.e)},
                    {"probability", d.probability},
                    {"vector", to_json(d.vector)},
                    {"prob_deviation", d.prob_deviation},
                    {"vector_deviation", d.vector_deviation}});
  }
  return {{"t", to_json(r.t)},
          {"g", r.g},
          {"max_prob_deviation", r.max_prob_deviation},
          {"max_vector_deviation", r.max_vector_deviation},
          {"max_deviation", r.max_deviation()},
          {"records", recs}};
}

/// Direction lists: [[x,y,z], ...] or {"directions": [[x,y,z], ...]}.
inline std::vector<Vec3> directions_from_json(const json& j) {
  const json& arr = j.is_object() ? j.at("directions") : j;
  if (!arr.is_array()) throw std::invalid_argument("directions: expected an array");
  std::vector<Vec3> out;
  for (const auto& d : arr) out.push_back(vec3_from_json(d, "direction"));
  return out;
}

}  // namespace steer::io
