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

// First-order sensitivity of a driven loop to static drive-amplitude and
// detuning offsets
//   V(t) = eps Omega |0><1| + eps conj(Omega) |1><0|
//        + eta omega_m (|0><0| - |1><1|)/2.
// In the frame of the transported branch states the diagonal element e(t) and
// the off-diagonal element g(t) of V control the fidelity to second order:
//   F ~ 1 - |int e|^2/2 - |int g|^2/2.
// The off-diagonal element carries the accumulated branch-phase difference
// Phi(t), so g(t) = <mu1|V|mu2> e^{+i Phi(t)}.

#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "ongqg/controls.hpp"
#include "ongqg/math.hpp"
#include "ongqg/trajectory.hpp"

namespace ongqg {

struct ErrorModel {
  double eps = 0.0;
  double eta = 0.0;
  double omega_m = 1.0;  // scale of the detuning offset; use the drive's own peak
};

// V(t) as a matrix, for exact propagation alongside the ideal field.
inline Matrix2cd error_hamiltonian(const ErrorModel& err, cd omega) {
  Matrix2cd v;
  const cd e = err.eps * omega;
  const double z = 0.5 * err.eta * err.omega_m;
  v << z, e, std::conj(e), -z;
  return v;
}

struct ErrorIntegralTotals {
  cd g_eps{0, 0}, g_eta{0, 0};
  double e_eps = 0.0, e_eta = 0.0;
  cd g() const { return g_eps + g_eta; }
  double e() const { return e_eps + e_eta; }
};

struct ErrorIntegrands {
  std::vector<double> t;
  std::vector<cd> g_eps, g_eta;
  std::vector<double> e_eps, e_eta;
  ErrorIntegralTotals totals;
};

namespace detail {

// Point value given the local path data and accumulated phase.
inline void integrand_point(const TrajectoryPoint& q, double phase_acc, const ErrorModel& err,
                            cd& g_eps, cd& g_eta, double& e_eps, double& e_eta) {
  const double s = std::sin(q.theta), c = std::cos(q.theta);
  const cd ph = std::exp(-iu * (q.phi - phase_acc));
  g_eps = 0.5 * err.eps * (q.dphi * s * c * c + iu * q.dtheta) * ph;
  g_eta = 0.5 * err.eta * err.omega_m * s * ph;
  e_eps = -0.5 * err.eps * q.dphi * s * s * c;
  e_eta = 0.5 * err.eta * err.omega_m * c;
}

}  // namespace detail

inline ErrorIntegrands integrands(const AnsatzParams& p, const ErrorModel& err, int grid = 4000) {
  if (grid % 2) ++grid;
  ErrorIntegrands out;
  const std::vector<double> phase = running_geometric_phase(p, grid);
  out.t.resize(grid + 1);
  out.g_eps.resize(grid + 1);
  out.g_eta.resize(grid + 1);
  out.e_eps.resize(grid + 1);
  out.e_eta.resize(grid + 1);
  for (int k = 0; k <= grid; ++k) {
    const double t = p.tau * k / grid;
    out.t[k] = t;
    detail::integrand_point(eval(p, t), phase[k], err, out.g_eps[k], out.g_eta[k], out.e_eps[k],
                            out.e_eta[k]);
  }
  const double h = p.tau / grid;
  out.totals.g_eps = simpson_samples(out.g_eps, h);
  out.totals.g_eta = simpson_samples(out.g_eta, h);
  out.totals.e_eps = simpson_samples(out.e_eps, h);
  out.totals.e_eta = simpson_samples(out.e_eta, h);
  return out;
}

// Same integrals along the reference loop.  The loop is only piecewise
// smooth (segment phases jump at the pole crossings), so each segment is
// integrated separately.
inline ErrorIntegralTotals loop_integral_totals(const SingleLoop& loop, const ErrorModel& err,
                                                int grid = 4000) {
  ErrorIntegralTotals tot;
  const double edges[4] = {0.0, loop.T1, loop.T2, loop.T};
  for (int seg = 0; seg < 3; ++seg) {
    const double a = edges[seg], b = edges[seg + 1];
    if (b - a < 1e-15 * loop.T) continue;
    const int n = std::max(16, grid / 3);
    // Boundary nodes take the segment's one-sided limit.
    auto point = [&](double t) {
      cd ge, gn;
      double ee, en;
      detail::integrand_point(loop.path(t, seg), loop.running_phase_of_segment(seg), err, ge, gn,
                              ee, en);
      return std::array<cd, 4>{ge, gn, cd(ee, 0), cd(en, 0)};
    };
    auto comp = [&](int which) {
      return simpson([&](double t) { return point(t)[which]; }, a, b, n);
    };
    tot.g_eps += comp(0);
    tot.g_eta += comp(1);
    tot.e_eps += comp(2).real();
    tot.e_eta += comp(3).real();
  }
  return tot;
}

inline double perturbative_fidelity(const ErrorIntegralTotals& tot) {
  const double e = tot.e();
  const cd g = tot.g();
  return 1.0 - 0.5 * e * e - 0.5 * std::norm(g);
}

inline double perturbative_fidelity(const AnsatzParams& p, const ErrorModel& err,
                                    int grid = 4000) {
  return perturbative_fidelity(integrands(p, err, grid).totals);
}

// Sensitivity cost per error channel at unit error strength:
//   |int e| + |int Re g| + |int Im g|.
struct CostComponents {
  double f_eps = 0.0;
  double f_eta = 0.0;
  double total() const { return f_eps + f_eta; }
};

namespace detail {

inline CostComponents cost_from(const ErrorIntegralTotals& eps_tot,
                                const ErrorIntegralTotals& eta_tot) {
  CostComponents c;
  c.f_eps = std::abs(eps_tot.e_eps) + std::abs(eps_tot.g_eps.real()) +
            std::abs(eps_tot.g_eps.imag());
  c.f_eta = std::abs(eta_tot.e_eta) + std::abs(eta_tot.g_eta.real()) +
            std::abs(eta_tot.g_eta.imag());
  return c;
}

}  // namespace detail

inline CostComponents cost(const AnsatzParams& p, double omega_m, int grid = 4000) {
  const ErrorIntegrands both = integrands(p, {1.0, 1.0, omega_m}, grid);
  return detail::cost_from(both.totals, both.totals);
}

inline CostComponents cost(const SingleLoop& loop, int grid = 4000) {
  // Detuning scale matched to the loop's own drive peak |Omega| = omega_m/2.
  const ErrorIntegralTotals tot = loop_integral_totals(loop, {1.0, 1.0, 0.5 * loop.spec.omega_m},
                                                       grid);
  return detail::cost_from(tot, tot);
}

}  // namespace ongqg
