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

// Two-qubit states in the Pauli basis:
//
//   rho = 1/4 (1x1 + a.sigma x 1 + 1 x b.sigma + sum_jk T_jk sigma_j x sigma_k)
//
// with a, b the local Bloch vectors and T the spin correlation matrix.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include "steer/errors.hpp"
#include "steer/linalg.hpp"

namespace steer {

using Complex = std::complex<double>;
using CMat2 = std::array<std::array<Complex, 2>, 2>;
using CMat4 = std::array<std::array<Complex, 4>, 4>;

/// Absolute tolerance on density-operator eigenvalues.
inline constexpr double kTolPsd = 1e-10;

struct TwoQubitState {
  Vec3 a{};
  Vec3 b{};
  Mat3 t{};

  bool is_tstate() const {
    return a == Vec3{} && b == Vec3{} && t[0][1] == 0 && t[0][2] == 0 &&
           t[1][0] == 0 && t[1][2] == 0 && t[2][0] == 0 && t[2][1] == 0;
  }
};

/// Bell-diagonal state: a = b = 0, T = diag(t).
struct TState {
  Vec3 t{};

  Vec3 semiaxes() const {
    return {std::abs(t[0]), std::abs(t[1]), std::abs(t[2])};
  }
  bool full_rank() const { return t[0] != 0 && t[1] != 0 && t[2] != 0; }
  TwoQubitState to_state() const { return {Vec3{}, Vec3{}, diag3(t)}; }
};

/// T = R_A diag(D) R_B^T with proper rotations and |D| descending.
struct CanonicalForm {
  Mat3 r_a;
  Mat3 r_b;
  Vec3 d;
  Vec3 a_loc;  // R_A^T a
  Vec3 b_loc;  // R_B^T b

  Mat3 reconstruct() const { return r_a * diag3(d) * transpose(r_b); }
};

namespace pauli {

inline CMat2 matrix(int k) {
  const Complex i{0.0, 1.0};
  switch (k) {
    case 0:
      return {{{1.0, 0.0}, {0.0, 1.0}}};
    case 1:
      return {{{0.0, 1.0}, {1.0, 0.0}}};
    case 2:
      return {{{0.0, -i}, {i, 0.0}}};
    default:
      return {{{1.0, 0.0}, {0.0, -1.0}}};
  }
}

inline CMat4 kron(const CMat2& x, const CMat2& y) {
  CMat4 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r[2 * i + k][2 * j + l] = x[i][j] * y[k][l];
  return r;
}

}  // namespace pauli

inline CMat4 density_matrix(const TwoQubitState& s) {
  // coefficient of sigma_j x sigma_k, index 0 = identity
  double coef[4][4] = {};
  coef[0][0] = 1.0;
  for (int j = 0; j < 3; ++j) {
    coef[j + 1][0] = s.a[j];
    coef[0][j + 1] = s.b[j];
    for (int k = 0; k < 3; ++k) coef[j + 1][k + 1] = s.t[j][k];
  }
  CMat4 rho{};
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      if (coef[j][k] == 0.0) continue;
      const CMat4 p = pauli::kron(pauli::matrix(j), pauli::matrix(k));
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) rho[r][c] += 0.25 * coef[j][k] * p[r][c];
    }
  }
  return rho;
}

/// Eigenvalues (ascending) of a Hermitian 4x4 matrix, via the real 8x8
/// embedding [[Re, -Im], [Im, Re]] whose spectrum is each eigenvalue twice.
inline std::array<double, 4> hermitian_eigenvalues(const CMat4& h) {
  SquareMatrix<8> m{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double re = 0.5 * (h[i][j].real() + h[j][i].real());
      const double im = 0.5 * (h[i][j].imag() - h[j][i].imag());
      m[i][j] = re;
      m[i + 4][j + 4] = re;
      m[i + 4][j] = im;
      m[i][j + 4] = -im;
    }
  }
  const auto eig = jacobi_eigen<8>(m);
  std::array<double, 4> out{};
  for (int k = 0; k < 4; ++k) out[k] = 0.5 * (eig.values[2 * k] + eig.values[2 * k + 1]);
  return out;
}

inline std::array<double, 4> state_eigenvalues(const TwoQubitState& s) {
  return hermitian_eigenvalues(density_matrix(s));
}

/// Validates a, b, T and returns the state.
/// Throws NotAState if the reconstructed operator is not PSD.
inline TwoQubitState make_state(const Vec3& a, const Vec3& b, const Mat3& t) {
  const auto finite = [](double x) { return std::isfinite(x); };
  bool ok = std::all_of(a.begin(), a.end(), finite) &&
            std::all_of(b.begin(), b.end(), finite);
  for (const auto& row : t) ok = ok && std::all_of(row.begin(), row.end(), finite);
  if (!ok) throw NotAState("non-finite state parameter", std::nan(""));

  TwoQubitState s{a, b, t};
  const auto ev = state_eigenvalues(s);
  if (ev[0] < -kTolPsd) {
    std::ostringstream msg;
    msg << "density operator not positive semidefinite: min eigenvalue "
        << ev[0];
    throw NotAState(msg.str(), ev[0]);
  }
  return s;
}

inline TState make_tstate(const Vec3& t) {
  make_state(Vec3{}, Vec3{}, diag3(t));
  return TState{t};
}

/// Partial transpose on Bob's qubit.
inline CMat4 partial_transpose_b(const CMat4& rho) {
  CMat4 r{};
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) r[2 * i + k][2 * j + l] = rho[2 * i + l][2 * j + k];
  return r;
}

/// Two-qubit separability via positivity of the partial transpose.
inline bool ppt_separable(const TwoQubitState& s) {
  return hermitian_eigenvalues(partial_transpose_b(density_matrix(s)))[0] >= -kTolPsd;
}

inline CanonicalForm canonical_form(const TwoQubitState& s) {
  Svd3 svd = svd3(s.t);
  Vec3 d = svd.sigma;
  if (det(svd.u) < 0) {
    set_column(svd.u, 2, -column(svd.u, 2));
    d[2] = -d[2];
  }
  if (det(svd.v) < 0) {
    set_column(svd.v, 2, -column(svd.v, 2));
    d[2] = -d[2];
  }
  return {svd.u, svd.v, d, transpose(svd.u) * s.a, transpose(svd.v) * s.b};
}

/// Spin covariance matrix C = T - a b^T.
inline Mat3 covariance_matrix(const TwoQubitState& s) {
  return s.t - outer(s.a, s.b);
}

/// Expectation value tr[rho O].
inline Complex expectation(const CMat4& rho, const CMat4& op) {
  Complex acc{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) acc += rho[i][j] * op[j][i];
  return acc;
}

/// Pauli coordinates of a 4x4 density operator: a_j = tr[rho s_j x 1],
/// b_k = tr[rho 1 x s_k], T_jk = tr[rho s_j x s_k].
inline TwoQubitState state_from_density(const CMat4& rho) {
  TwoQubitState s;
  for (int j = 0; j < 3; ++j) {
    s.a[j] = expectation(rho, pauli::kron(pauli::matrix(j + 1), pauli::matrix(0))).real();
    s.b[j] = expectation(rho, pauli::kron(pauli::matrix(0), pauli::matrix(j + 1))).real();
    for (int k = 0; k < 3; ++k) {
      s.t[j][k] =
          expectation(rho, pauli::kron(pauli::matrix(j + 1), pauli::matrix(k + 1))).real();
    }
  }
  return s;
}

/// Bob's reduced state tr_A[rho].
inline CMat2 reduced_b(const CMat4& rho) {
  CMat2 r{};
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) r[k][l] = rho[k][l] + rho[2 + k][2 + l];
  return r;
}

/// Alice's reduced state tr_B[rho].
inline CMat2 reduced_a(const CMat4& rho) {
  CMat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = rho[2 * i][2 * j] + rho[2 * i + 1][2 * j + 1];
  return r;
}

/// Proper rotation from a unit axis and angle (Rodrigues).
inline Mat3 axis_rotation(const Vec3& axis, double angle) {
  const Vec3 k = normalized(axis);
  const double c = std::cos(angle), s = std::sin(angle);
  const Mat3 kx{{{0, -k[2], k[1]}, {k[2], 0, -k[0]}, {-k[1], k[0], 0}}};
  return identity3() + s * kx + (1.0 - c) * (kx * kx);
}

/// The state after local rotations: a -> R_A a, b -> R_B b, T -> R_A T R_B^T.
inline TwoQubitState rotate_locally(const TwoQubitState& s, const Mat3& r_a,
                                    const Mat3& r_b) {
  return {r_a * s.a, r_b * s.b, r_a * s.t * transpose(r_b)};
}

}  // namespace steer
