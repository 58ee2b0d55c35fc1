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

// Small fixed-size linear algebra: 3-vectors, 3x3 matrices, cyclic Jacobi
// eigensolver for real symmetric matrices and a one-sided Jacobi SVD.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <utility>

namespace steer {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;  // row-major: m[row][col]

inline constexpr double kPi = 3.14159265358979323846264338327950288;

inline Vec3 operator+(const Vec3& x, const Vec3& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2]};
}
inline Vec3 operator-(const Vec3& x, const Vec3& y) {
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2]};
}
inline Vec3 operator-(const Vec3& x) { return {-x[0], -x[1], -x[2]}; }
inline Vec3 operator*(double s, const Vec3& x) {
  return {s * x[0], s * x[1], s * x[2]};
}
inline Vec3 operator*(const Vec3& x, double s) { return s * x; }
inline Vec3 operator/(const Vec3& x, double s) {
  return {x[0] / s, x[1] / s, x[2] / s};
}

inline double dot(const Vec3& x, const Vec3& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}
inline double norm(const Vec3& x) { return std::sqrt(dot(x, x)); }
inline Vec3 cross(const Vec3& x, const Vec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2],
          x[0] * y[1] - x[1] * y[0]};
}
inline Vec3 normalized(const Vec3& x) { return x / norm(x); }

inline Mat3 identity3() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }
inline Mat3 zeros3() { return {}; }

inline Mat3 diag3(const Vec3& d) {
  return {{{d[0], 0, 0}, {0, d[1], 0}, {0, 0, d[2]}}};
}

inline Mat3 transpose(const Mat3& m) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[j][i];
  return r;
}

inline Mat3 operator*(const Mat3& x, const Mat3& y) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += x[i][k] * y[k][j];
  return r;
}
inline Vec3 operator*(const Mat3& m, const Vec3& v) {
  return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}
inline Mat3 operator+(const Mat3& x, const Mat3& y) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i) r[i] = x[i] + y[i];
  return r;
}
inline Mat3 operator-(const Mat3& x, const Mat3& y) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i) r[i] = x[i] - y[i];
  return r;
}
inline Mat3 operator*(double s, const Mat3& m) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i) r[i] = s * m[i];
  return r;
}

inline Mat3 outer(const Vec3& x, const Vec3& y) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = x[i] * y[j];
  return r;
}

inline Vec3 column(const Mat3& m, int j) { return {m[0][j], m[1][j], m[2][j]}; }
inline void set_column(Mat3& m, int j, const Vec3& c) {
  for (int i = 0; i < 3; ++i) m[i][j] = c[i];
}

inline double det(const Mat3& m) { return dot(m[0], cross(m[1], m[2])); }

/// Largest absolute entrywise difference.
inline double max_abs_diff(const Mat3& x, const Mat3& y) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(x[i][j] - y[i][j]));
  return r;
}

template <std::size_t N>
using SquareMatrix = std::array<std::array<double, N>, N>;

template <std::size_t N>
struct SymmetricEigen {
  std::array<double, N> values;  // ascending
  SquareMatrix<N> vectors;       // column k is the eigenvector of values[k]
};

/// Cyclic Jacobi eigen-decomposition of a real symmetric matrix. Only the
/// upper triangle is trusted; the input is symmetrised first.
template <std::size_t N>
SymmetricEigen<N> jacobi_eigen(SquareMatrix<N> a) {
  SquareMatrix<N> v{};
  for (std::size_t i = 0; i < N; ++i) v[i][i] = 1.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) a[j][i] = a[i][j];

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      scale += a[i][i] * a[i][i];
      for (std::size_t j = i + 1; j < N; ++j) off += a[i][j] * a[i][j];
    }
    if (off <= 1e-32 * std::max(scale, 1e-300) || off == 0.0) break;

    for (std::size_t p = 0; p < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < N; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a[i][i] < a[j][j]; });
  SymmetricEigen<N> out{};
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a[order[k]][order[k]];
    for (std::size_t i = 0; i < N; ++i) out.vectors[i][k] = v[i][order[k]];
  }
  return out;
}

inline SymmetricEigen<3> jacobi_eigen3(const Mat3& m) {
  SquareMatrix<3> a{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = m[i][j];
  return jacobi_eigen<3>(a);
}

/// M = U diag(sigma) V^T with U, V orthogonal and sigma descending >= 0.
struct Svd3 {
  Mat3 u;
  Vec3 sigma;
  Mat3 v;
};

namespace detail {

// Extends the first `rank` orthonormal columns of m to an orthonormal basis.
inline void complete_basis(Mat3& m, int rank) {
  static const Mat3 kAxes = identity3();
  for (int j = rank; j < 3; ++j) {
    Vec3 best{};
    double best_norm = -1.0;
    for (int a = 0; a < 3; ++a) {
      Vec3 c = kAxes[a];
      for (int k = 0; k < j; ++k) {
        const Vec3 q = column(m, k);
        c = c - dot(q, c) * q;
      }
      const double n = norm(c);
      if (n > best_norm) {
        best_norm = n;
        best = c;
      }
    }
    set_column(m, j, best / best_norm);
  }
}

}  // namespace detail

/// One-sided (Hestenes) Jacobi SVD; accurate to a few ulps of ||M||.
inline Svd3 svd3(const Mat3& m) {
  Mat3 w = m;
  Mat3 v = identity3();
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        double alpha = 0, beta = 0, gamma = 0;
        for (int i = 0; i < 3; ++i) {
          alpha += w[i][p] * w[i][p];
          beta += w[i][q] * w[i][q];
          gamma += w[i][p] * w[i][q];
        }
        if (gamma == 0.0 || std::abs(gamma) <= 1e-17 * std::sqrt(alpha * beta))
          continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (int i = 0; i < 3; ++i) {
          const double wp = w[i][p], wq = w[i][q];
          w[i][p] = c * wp - s * wq;
          w[i][q] = s * wp + c * wq;
          const double vp = v[i][p], vq = v[i][q];
          v[i][p] = c * vp - s * vq;
          v[i][q] = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }

  std::array<int, 3> order{0, 1, 2};
  Vec3 norms{norm(column(w, 0)), norm(column(w, 1)), norm(column(w, 2))};
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return norms[i] > norms[j]; });

  Svd3 out{};
  const double tiny = 1e-300;
  int rank = 0;
  for (int k = 0; k < 3; ++k) {
    const int j = order[k];
    out.sigma[k] = norms[j];
    set_column(out.v, k, column(v, j));
    if (norms[j] > tiny && norms[j] > 1e-15 * norms[order[0]]) {
      set_column(out.u, k, column(w, j) / norms[j]);
      rank = k + 1;
    }
  }
  detail::complete_basis(out.u, rank);
  return out;
}

/// Descending singular values.
inline Vec3 singular_values(const Mat3& m) { return svd3(m).sigma; }

}  // namespace steer
