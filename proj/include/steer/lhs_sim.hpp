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

// Executable LHS model for T-states.
//
// Hidden state n ~ P(n) = N_T (n^T T^-2 n)^-2, Alice outputs 1 for direction e
// iff n^T T^-1 e >= 0, Bob receives the pure state with Bloch vector n. On the
// boundary this reproduces p(e) = 1/2 and E[1{e} n] = T e / 2.
//
// Below the boundary T = q T_b with q = 2 R_G(s^2) in (0, 1): with
// probability q run the boundary model for T_b, otherwise draw n uniformly and
// answer with a fair coin.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <thread>
#include <vector>

#include "steer/errors.hpp"
#include "steer/lhs_boundary.hpp"
#include "steer/linalg.hpp"
#include "steer/qstate.hpp"
#include "steer/quadrature.hpp"
#include "steer/sampling.hpp"
#include "steer/specfun.hpp"

namespace steer {

/// 1 iff n^T T^-1 e >= 0 for T = diag(t).
inline int response(const Vec3& t, const Vec3& e, const Vec3& n) {
  detail::require_full_rank(t, "response");
  return n[0] * e[0] / t[0] + n[1] * e[1] / t[1] + n[2] * e[2] / t[2] >= 0.0 ? 1 : 0;
}

struct LhsModel {
  LhsDensity density;

  static LhsModel make(const TState& ts) { return {LhsDensity::make(ts.t)}; }

  int respond(const Vec3& e, const Vec3& n) const { return response(density.t, e, n); }
};

inline double density_value(const LhsModel& model, const Vec3& n) {
  detail::require_full_rank(model.density.t, "density_value");
  return model.density(n);
}

struct DirectionRecord {
  Vec3 e{};
  double p_hat = 0.0;
  double p_std_err = 0.0;
  Vec3 b_hat{};  // E[1{outcome e} n], target T e / 2
  Vec3 b_std_err{};
  Vec3 cond_hat{};  // E[n | outcome e], target T e
  Vec3 cond_std_err{};
  double p_exact = 0.5;
  Vec3 b_exact{};
  Vec3 cond_exact{};
};

struct SimulationReport {
  Vec3 t{};
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
  double mixing_weight = 1.0;  // q; 1 on the boundary
  double acceptance_rate = 0.0;
  std::vector<DirectionRecord> records;
};

namespace detail {

inline constexpr std::uint64_t kSimBlock = 1 << 16;

struct SimAccumulator {
  std::uint64_t hits = 0;
  Vec3 sum{};
  Vec3 sum_sq{};
  std::uint64_t proposals = 0;
  std::uint64_t boundary_draws = 0;

  void merge(const SimAccumulator& o) {
    hits += o.hits;
    sum = sum + o.sum;
    sum_sq = sum_sq + o.sum_sq;
    proposals += o.proposals;
    boundary_draws += o.boundary_draws;
  }
};

inline SimAccumulator simulate_block(const LhsDensity& density, double bound, double q,
                                     const Vec3& e, std::uint64_t seed,
                                     std::uint64_t stream, std::uint64_t n) {
  CounterRng rng(seed, stream);
  SimAccumulator acc;
  for (std::uint64_t i = 0; i < n; ++i) {
    Vec3 hidden;
    int r;
    if (q >= 1.0 || rng.uniform() < q) {
      hidden = draw_by_rejection(density, bound, rng, acc.proposals);
      r = response(density.t, e, hidden);
      ++acc.boundary_draws;
    } else {
      hidden = uniform_unit_vector(rng);
      r = rng.uniform() < 0.5 ? 1 : 0;
    }
    if (r) {
      ++acc.hits;
      acc.sum = acc.sum + hidden;
      for (int k = 0; k < 3; ++k) acc.sum_sq[k] += hidden[k] * hidden[k];
    }
  }
  return acc;
}

}  // namespace detail

/// Monte Carlo run of the model for each direction. Results depend only on
/// (ts, directions, count, seed), never on `threads`.
inline SimulationReport simulate(const TState& ts, const std::vector<Vec3>& directions,
                                 std::uint64_t count, std::uint64_t seed,
                                 unsigned threads = 0) {
  detail::require_full_rank(ts.t, "simulate");
  if (count == 0) throw std::invalid_argument("simulate: count must be positive");
  const double g = boundary_value(ts).g;
  if (g < -1e-9) {
    std::ostringstream msg;
    msg << "state lies beyond the LHS boundary (g = " << g << ")";
    throw NotInModelRegion(msg.str());
  }
  const Vec3 s = ts.semiaxes();
  double q = 2.0 * carlson_rg(s[0] * s[0], s[1] * s[1], s[2] * s[2]);
  if (q > 1.0) q = 1.0;  // |g| <= 1e-9 on the boundary
  const Vec3 t_b = ts.t / q;
  const LhsDensity density = LhsDensity::make(t_b);
  const double bound = density.sup();

  const std::uint64_t blocks = (count + detail::kSimBlock - 1) / detail::kSimBlock;
  const std::size_t jobs = directions.size() * blocks;
  std::vector<detail::SimAccumulator> parts(jobs);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));

  auto run = [&](std::size_t job) {
    const std::size_t d = job / blocks;
    const std::uint64_t b = job % blocks;
    const std::uint64_t n = std::min(detail::kSimBlock, count - b * detail::kSimBlock);
    const Vec3 e = normalized(directions[d]);
    parts[job] = detail::simulate_block(density, bound, q, e, seed,
                                        (static_cast<std::uint64_t>(d) << 32) | b, n);
  };
  if (threads <= 1) {
    for (std::size_t j = 0; j < jobs; ++j) run(j);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t j = w; j < jobs; j += threads) run(j);
      });
    }
    for (auto& th : pool) th.join();
  }

  SimulationReport rep;
  rep.t = ts.t;
  rep.seed = seed;
  rep.count = count;
  rep.mixing_weight = q;
  std::uint64_t proposals = 0, accepted = 0;
  const double nn = static_cast<double>(count);
  for (std::size_t d = 0; d < directions.size(); ++d) {
    detail::SimAccumulator acc;
    for (std::uint64_t b = 0; b < blocks; ++b) acc.merge(parts[d * blocks + b]);
    proposals += acc.proposals;
    accepted += acc.boundary_draws;

    DirectionRecord r;
    r.e = normalized(directions[d]);
    const Vec3 te{ts.t[0] * r.e[0], ts.t[1] * r.e[1], ts.t[2] * r.e[2]};
    r.b_exact = 0.5 * te;
    r.cond_exact = te;
    r.p_hat = acc.hits / nn;
    r.p_std_err = std::sqrt(r.p_hat * (1.0 - r.p_hat) / nn);
    r.b_hat = acc.sum / nn;
    const double k = static_cast<double>(acc.hits);
    for (int c = 0; c < 3; ++c) {
      const double m2 = acc.sum_sq[c] / nn;
      r.b_std_err[c] = std::sqrt(std::max(0.0, m2 - r.b_hat[c] * r.b_hat[c]) / nn);
      if (acc.hits > 0) {
        r.cond_hat[c] = acc.sum[c] / k;
        const double c2 = acc.sum_sq[c] / k;
        r.cond_std_err[c] = std::sqrt(std::max(0.0, c2 - r.cond_hat[c] * r.cond_hat[c]) / k);
      }
    }
    rep.records.push_back(r);
  }
  rep.acceptance_rate = proposals ? static_cast<double>(accepted) / proposals : 0.0;
  return rep;
}

/// Quadrature of the model's outputs for one direction:
/// [\int_{R[e]} P, \int_{R[e]} P n].
inline std::array<double, 4> model_moments(const LhsDensity& density, const Vec3& e,
                                           const QuadratureSpec& spec = {}) {
  const Vec3& t = density.t;
  const Vec3 v{e[0] / t[0], e[1] / t[1], e[2] / t[2]};
  return hemisphere_integral(
      [&](const Vec3& n) {
        const double p = density(n);
        return std::array<double, 4>{p, p * n[0], p * n[1], p * n[2]};
      },
      v, spec);
}

struct VerifyRecord {
  Vec3 e{};
  double probability = 0.0;
  Vec3 vector{};
  double prob_deviation = 0.0;    // |p - 1/2|
  double vector_deviation = 0.0;  // max_k |v_k - (T e)_k / 2|
};

struct VerifyReport {
  Vec3 t{};
  double g = 0.0;
  double max_prob_deviation = 0.0;
  double max_vector_deviation = 0.0;
  std::vector<VerifyRecord> records;

  double max_deviation() const { return std::max(max_prob_deviation, max_vector_deviation); }
};

/// Deviations of the model's outputs from the quantum targets, without
/// requiring the state to be on the boundary.
inline VerifyReport model_residual(const TState& ts, const std::vector<Vec3>& directions,
                                   const QuadratureSpec& spec = {}) {
  detail::require_full_rank(ts.t, "model_residual");
  const LhsDensity density = LhsDensity::make(ts.t);
  VerifyReport rep;
  rep.t = ts.t;
  rep.g = boundary_value(ts).g;
  for (const Vec3& raw : directions) {
    VerifyRecord r;
    r.e = normalized(raw);
    const auto m = model_moments(density, r.e, spec);
    r.probability = m[0];
    r.vector = {m[1], m[2], m[3]};
    r.prob_deviation = std::abs(m[0] - 0.5);
    for (int k = 0; k < 3; ++k) {
      r.vector_deviation =
          std::max(r.vector_deviation, std::abs(r.vector[k] - 0.5 * ts.t[k] * r.e[k]));
    }
    rep.max_prob_deviation = std::max(rep.max_prob_deviation, r.prob_deviation);
    rep.max_vector_deviation = std::max(rep.max_vector_deviation, r.vector_deviation);
    rep.records.push_back(r);
  }
  return rep;
}

/// model_residual restricted to boundary states (|g| <= 1e-6).
inline VerifyReport verify_model(const TState& ts, const std::vector<Vec3>& directions,
                                 const QuadratureSpec& spec = {}) {
  detail::require_full_rank(ts.t, "verify_model");
  const double g = boundary_value(ts).g;
  if (std::abs(g) > 1e-6) {
    std::ostringstream msg;
    msg << "state is not on the LHS boundary (g = " << g << ")";
    throw NotOnBoundary(msg.str());
  }
  return model_residual(ts, directions, spec);
}

}  // namespace steer
