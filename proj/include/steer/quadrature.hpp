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

// Product quadrature on the unit sphere: Gauss-Legendre in cos(theta) times
// the periodic trapezoid rule in phi. Hemispheres are integrated by rotating
// the pole onto the hemisphere axis, so the rim is the rule's equator and no
// indicator function is ever sampled.

#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "steer/linalg.hpp"

namespace steer {

struct QuadratureSpec {
  int order_theta = 256;  // Gauss-Legendre nodes in cos(theta)
  int order_phi = 512;    // trapezoid nodes in phi
  double target_rel_tol = 1e-10;

  void validate() const {
    if (order_theta < 2 || order_phi < 4) {
      throw std::invalid_argument("quadrature orders must be >= 2 (theta) and >= 4 (phi)");
    }
  }
};

/// Nodes and weights on [-1, 1], nodes ascending.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendre(int n) : nodes(n), weights(n) {
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) {
          // refresh derivative at the converged node
          p0 = 1.0;
          p1 = x;
          for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
          }
          dp = n * (x * p1 - p0) / (x * x - 1.0);
          break;
        }
      }
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      nodes[i] = -x;
      nodes[n - 1 - i] = x;
      weights[i] = weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) nodes[n / 2] = 0.0;
  }
};

/// Shared immutable node table for order n.
inline const GaussLegendre& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const GaussLegendre>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<const GaussLegendre>(n);
  return *slot;
}

namespace detail {

template <class R>
void axpy(R& acc, double w, const R& v) {
  if constexpr (std::is_arithmetic_v<R>) {
    acc += w * v;
  } else {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w * v[i];
  }
}

template <class F>
using IntegrandResult = std::decay_t<std::invoke_result_t<F&, const Vec3&>>;

// Integrates f(frame * n') over the polar cap cos(theta') in [z_lo, 1].
template <class F>
IntegrandResult<F> cap_integral(F& f, const Mat3* frame, double z_lo,
                                const QuadratureSpec& spec) {
  spec.validate();
  using R = IntegrandResult<F>;
  const GaussLegendre& gl = gauss_legendre(spec.order_theta);
  const double half = 0.5 * (1.0 - z_lo);
  const double dphi = 2.0 * kPi / spec.order_phi;
  std::vector<double> cphi(spec.order_phi), sphi(spec.order_phi);
  for (int j = 0; j < spec.order_phi; ++j) {
    cphi[j] = std::cos(j * dphi);
    sphi[j] = std::sin(j * dphi);
  }
  R total{};
  for (int i = 0; i < spec.order_theta; ++i) {
    const double z = z_lo + half * (gl.nodes[i] + 1.0);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    R ring{};
    for (int j = 0; j < spec.order_phi; ++j) {
      const Vec3 local{rho * cphi[j], rho * sphi[j], z};
      axpy(ring, 1.0, frame ? f((*frame) * local) : f(local));
    }
    axpy(total, half * gl.weights[i] * dphi, ring);
  }
  return total;
}

}  // namespace detail

/// \int_{S^2} f(n) d^2n. f may return double or std::array<double, K>.
template <class F>
auto sphere_integral(F&& f, const QuadratureSpec& spec = {}) {
  return detail::cap_integral(f, nullptr, -1.0, spec);
}

/// Proper rotation mapping (0,0,1) to v, R = Rz(beta) Ry(alpha), where
/// (alpha, beta) are the colatitude and azimuth of v.
struct RotationToPole {
  Mat3 r;
  double alpha;
  double beta;
};

inline RotationToPole rotation_to_pole(const Vec3& v_in) {
  const Vec3 v = normalized(v_in);
  const double ca = v[2];
  const double sa = std::hypot(v[0], v[1]);
  double cb = 1.0, sb = 0.0;
  if (sa > 0.0) {
    cb = v[0] / sa;
    sb = v[1] / sa;
  }
  RotationToPole out;
  out.alpha = std::atan2(sa, ca);
  out.beta = sa > 0.0 ? std::atan2(sb, cb) : 0.0;
  if (out.beta < 0.0) out.beta += 2.0 * kPi;
  out.r = {{{ca * cb, -sb, sa * cb}, {ca * sb, cb, sa * sb}, {-sa, 0.0, ca}}};
  return out;
}

/// \int_{n.v >= 0} f(n) d^2n.
template <class F>
auto hemisphere_integral(F&& f, const Vec3& v, const QuadratureSpec& spec = {}) {
  const Mat3 frame = rotation_to_pole(v).r;
  return detail::cap_integral(f, &frame, 0.0, spec);
}

/// \int_{S^2} f(n) d^2n for f smooth on each side of the great circle
/// n.w = 0 but not across it (e.g. |n.w|). The product rule converges only
/// algebraically on such a kink; splitting keeps spectral accuracy.
template <class F>
auto sphere_integral_split(F&& f, const Vec3& w, const QuadratureSpec& spec = {}) {
  auto upper = hemisphere_integral(f, w, spec);
  detail::axpy(upper, 1.0, hemisphere_integral(f, -w, spec));
  return upper;
}

/// Colatitude chi(phi) at which the great circle n.v = 0 crosses azimuth
/// phi, for v in the closed northern hemisphere. When v is horizontal and phi
/// lies in the circle's own meridian plane every colatitude is on the
/// circle; pi/2 is returned.
inline double boundary_colatitude(const Vec3& v, double phi) {
  const RotationToPole rp = rotation_to_pole(v);
  const Vec3 u = normalized(v);
  const double ca = u[2];
  const double sa = std::hypot(u[0], u[1]);
  const double c = std::cos(phi - rp.beta);
  const double den = std::hypot(ca, sa * c);
  if (den < 1e-15) return kPi / 2;
  return std::atan2(ca / den, -sa * c / den);
}

}  // namespace steer
