// Copyright 2026 The ongqg Authors
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

// Fixed-step RK4 propagation of the Schrodinger and Lindblad equations on
// small dense complex matrices, plus the fidelity measures used everywhere:
// trace overlap |Tr(Ut^dag Ua)|/d and the six-state average
// (1/6) sum_l <psi_l| U^dag rho_l U |psi_l> over |0>, |1>, |+/->, |+/-i>.

#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "ongqg/controls.hpp"
#include "ongqg/math.hpp"

namespace ongqg {

template <int N>
using MatN = Eigen::Matrix<cd, N, N>;

template <int N>
using HFun = std::function<MatN<N>(double)>;

// Solves dU/dt = -i H(t) U from t0 to t1.
template <int N>
MatN<N> propagate_unitary(const HFun<N>& h, double t0, double t1, int steps) {
  MatN<N> u = MatN<N>::Identity();
  const double dt = (t1 - t0) / steps;
  for (int k = 0; k < steps; ++k) {
    const double t = t0 + k * dt;
    const MatN<N> h1 = h(t);
    const MatN<N> h2 = h(t + 0.5 * dt);
    const MatN<N> h3 = h(t + dt);
    const MatN<N> k1 = -iu * (h1 * u);
    const MatN<N> k2 = -iu * (h2 * (u + 0.5 * dt * k1));
    const MatN<N> k3 = -iu * (h2 * (u + 0.5 * dt * k2));
    const MatN<N> k4 = -iu * (h3 * (u + dt * k3));
    u += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return u;
}

template <int N>
struct Collapse {
  MatN<N> op;
  double rate = 0.0;
};

template <int N>
struct NoiseModel {
  std::vector<Collapse<N>> ops;
  bool empty() const {
    for (const auto& c : ops)
      if (c.rate != 0.0) return false;
    return true;
  }
};

// Relaxation |0><1| and pure dephasing (|1><1| - |0><0|)/2.
inline NoiseModel<2> qubit_noise(double gamma_minus, double gamma_z) {
  Matrix2cd sm = Matrix2cd::Zero();
  sm(0, 1) = 1.0;
  Matrix2cd sz = Matrix2cd::Zero();
  sz(0, 0) = -0.5;
  sz(1, 1) = 0.5;
  return {{{sm, gamma_minus}, {sz, gamma_z}}};
}

// Ladder relaxation |0><1| + sqrt(2)|1><2| and dephasing |1><1| + 2|2><2|.
inline NoiseModel<3> transmon_noise(double gamma_minus, double gamma_z) {
  Matrix3cd sm = Matrix3cd::Zero();
  sm(0, 1) = 1.0;
  sm(1, 2) = std::sqrt(2.0);
  Matrix3cd sz = Matrix3cd::Zero();
  sz(1, 1) = 1.0;
  sz(2, 2) = 2.0;
  return {{{sm, gamma_minus}, {sz, gamma_z}}};
}

namespace detail {

// drho = -i(He rho - rho He^dag) + sum_j rate_j A_j rho A_j^dag, with
// He = H - (i/2) sum_j rate_j A_j^dag A_j folded in by the caller.
template <int N>
MatN<N> lindblad_rhs(const MatN<N>& he, const std::vector<Collapse<N>>& ops, const MatN<N>& rho) {
  MatN<N> d = -iu * (he * rho - rho * he.adjoint());
  for (const auto& c : ops) {
    if (c.rate != 0.0) d += c.rate * (c.op * rho * c.op.adjoint());
  }
  return d;
}

template <int N>
MatN<N> damping_term(const NoiseModel<N>& noise) {
  MatN<N> k = MatN<N>::Zero();
  for (const auto& c : noise.ops) k += (0.5 * c.rate) * (c.op.adjoint() * c.op);
  return k;
}

}  // namespace detail

// Propagates a set of operators under the same Lindblad generator; the
// members need not be Hermitian (the generator is complex-linear).  The
// density matrix is re-symmetrized each step when evolving Hermitian input.
template <int N>
void propagate_lindblad_stack(const HFun<N>& h, const NoiseModel<N>& noise, double t0, double t1,
                              int steps, std::vector<MatN<N>>& rhos, bool hermitian = false) {
  const double dt = (t1 - t0) / steps;
  const MatN<N> damp = detail::damping_term(noise);
  std::vector<MatN<N>> k1(rhos.size()), k2(rhos.size()), k3(rhos.size());
  for (int k = 0; k < steps; ++k) {
    const double t = t0 + k * dt;
    const MatN<N> he1 = h(t) - iu * damp;
    const MatN<N> he2 = h(t + 0.5 * dt) - iu * damp;
    const MatN<N> he3 = h(t + dt) - iu * damp;
    for (size_t m = 0; m < rhos.size(); ++m) {
      k1[m] = detail::lindblad_rhs<N>(he1, noise.ops, rhos[m]);
      k2[m] = detail::lindblad_rhs<N>(he2, noise.ops, MatN<N>(rhos[m] + 0.5 * dt * k1[m]));
      k3[m] = detail::lindblad_rhs<N>(he2, noise.ops, MatN<N>(rhos[m] + 0.5 * dt * k2[m]));
      const MatN<N> k4 = detail::lindblad_rhs<N>(he3, noise.ops, MatN<N>(rhos[m] + dt * k3[m]));
      rhos[m] += (dt / 6.0) * (k1[m] + 2.0 * k2[m] + 2.0 * k3[m] + k4);
      if (hermitian) rhos[m] = 0.5 * (rhos[m] + rhos[m].adjoint().eval());
    }
  }
}

template <int N>
MatN<N> propagate_lindblad(const HFun<N>& h, const NoiseModel<N>& noise, const MatN<N>& rho0,
                           double t0, double t1, int steps) {
  std::vector<MatN<N>> rhos{rho0};
  propagate_lindblad_stack<N>(h, noise, t0, t1, steps, rhos, true);
  return rhos[0];
}

template <typename MatA, typename MatB>
double trace_fidelity(const MatA& actual, const MatB& target) {
  return std::abs((target.adjoint() * actual).trace()) / double(actual.rows());
}

inline const std::array<Vector2cd, 6>& six_states() {
  static const std::array<Vector2cd, 6> s = [] {
    std::array<Vector2cd, 6> v;
    const double r = 1.0 / std::sqrt(2.0);
    v[0] << 1, 0;
    v[1] << 0, 1;
    v[2] << r, r;
    v[3] << r, -r;
    v[4] << r, iu * r;
    v[5] << r, -iu * r;
    return v;
  }();
  return s;
}

inline double fidelity_six_state(const HFun<2>& h, const NoiseModel<2>& noise,
                                 const Matrix2cd& target, double tau, int steps) {
  std::vector<Matrix2cd> rhos;
  rhos.reserve(6);
  for (const auto& psi : six_states()) rhos.push_back(psi * psi.adjoint());
  propagate_lindblad_stack<2>(h, noise, 0.0, tau, steps, rhos, true);
  double f = 0.0;
  for (size_t i = 0; i < rhos.size(); ++i) {
    const Vector2cd ideal = target * six_states()[i];
    f += (ideal.adjoint() * rhos[i] * ideal).value().real();
  }
  return f / 6.0;
}

// Three-level variant: initial states and the target live on the lowest two
// levels; population left on |2> counts as loss.  Returns the average fidelity
// and the mean terminal |2> population.
struct ThreeLevelResult {
  double fidelity = 0.0;
  double leakage = 0.0;
};

inline ThreeLevelResult fidelity_six_state_3level(const HFun<3>& h, const NoiseModel<3>& noise,
                                                  const Matrix2cd& target, double tau, int steps) {
  std::vector<Matrix3cd> rhos;
  rhos.reserve(6);
  for (const auto& psi : six_states()) {
    Eigen::Vector3cd p3 = Eigen::Vector3cd::Zero();
    p3.head<2>() = psi;
    rhos.push_back(p3 * p3.adjoint());
  }
  propagate_lindblad_stack<3>(h, noise, 0.0, tau, steps, rhos, true);
  ThreeLevelResult out;
  for (size_t i = 0; i < rhos.size(); ++i) {
    Eigen::Vector3cd ideal = Eigen::Vector3cd::Zero();
    ideal.head<2>() = target * six_states()[i];
    out.fidelity += (ideal.adjoint() * rhos[i] * ideal).value().real();
    out.leakage += rhos[i](2, 2).real();
  }
  out.fidelity /= 6.0;
  out.leakage /= 6.0;
  return out;
}

}  // namespace ongqg
