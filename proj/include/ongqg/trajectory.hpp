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

// Bloch-sphere trajectory ansatz.  A gate is encoded as a closed path
// (theta(t), phi(t)) of the auxiliary basis
//   |mu1> = cos(theta/2)|0> + sin(theta/2) e^{i phi}|1>,
//   |mu2> = sin(theta/2) e^{-i phi}|0> - cos(theta/2)|1>,
// traversed over t in [0, tau].  Each angle is a baseline profile plus a sum
// of powered-sine terms a * sin(b*pi*t/tau)^c.

#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "ongqg/math.hpp"

namespace ongqg {

struct BaselineProfile {
  enum class Kind { Constant, HalfSineSqRamp };
  Kind kind = Kind::Constant;
  double value = 0.0;  // constant level, or ramp total (profile = value*sin^2(pi t/(2 tau)))

  double eval(double t, double tau) const {
    if (kind == Kind::Constant) return value;
    const double s = std::sin(0.5 * pi * t / tau);
    return value * s * s;
  }
  double deriv(double t, double tau) const {
    if (kind == Kind::Constant) return 0.0;
    return value * (0.5 * pi / tau) * std::sin(pi * t / tau);
  }
  double deriv2(double t, double tau) const {
    if (kind == Kind::Constant) return 0.0;
    return value * (0.5 * pi / tau) * (pi / tau) * std::cos(pi * t / tau);
  }
};

// One term a * sin(b*pi*t/tau)^c. Exponent c >= 1 keeps derivatives smooth at
// the endpoints for c >= 2.
struct AnsatzTerm {
  double a = 0.0;
  double b = 1.0;
  int c = 2;
};

struct AngleSeries {
  BaselineProfile base;
  std::vector<AnsatzTerm> terms;

  double eval(double t, double tau) const {
    double v = base.eval(t, tau);
    for (const auto& m : terms) {
      v += m.a * std::pow(std::sin(m.b * pi * t / tau), m.c);
    }
    return v;
  }
  double deriv(double t, double tau) const {
    double v = base.deriv(t, tau);
    for (const auto& m : terms) {
      const double w = m.b * pi / tau;
      const double s = std::sin(w * t);
      v += m.a * m.c * std::pow(s, m.c - 1) * std::cos(w * t) * w;
    }
    return v;
  }
  double deriv2(double t, double tau) const {
    double v = base.deriv2(t, tau);
    for (const auto& m : terms) {
      const double w = m.b * pi / tau;
      const double s = std::sin(w * t);
      const double co = std::cos(w * t);
      double d2 = -std::pow(s, m.c);
      if (m.c >= 2) d2 += (m.c - 1) * std::pow(s, m.c - 2) * co * co;
      v += m.a * m.c * w * w * d2;
    }
    return v;
  }
};

struct AnsatzParams {
  double tau = 1.0;
  AngleSeries theta;
  AngleSeries phi;
};

struct TrajectoryPoint {
  double t = 0, theta = 0, phi = 0, dtheta = 0, dphi = 0;
};

inline TrajectoryPoint eval(const AnsatzParams& p, double t) {
  return {t, p.theta.eval(t, p.tau), p.phi.eval(t, p.tau), p.theta.deriv(t, p.tau),
          p.phi.deriv(t, p.tau)};
}

// Rotation exp(-i Theta/2 n.sigma) about axis n = (sin t0 cos p0, sin t0 sin p0, cos t0).
struct GateTarget {
  double theta0 = 0.0;
  double phi0 = 0.0;
  double Theta = 0.0;

  Eigen::Vector3d axis() const {
    return {std::sin(theta0) * std::cos(phi0), std::sin(theta0) * std::sin(phi0),
            std::cos(theta0)};
  }
  Matrix2cd unitary() const {
    const Eigen::Vector3d n = axis();
    const Matrix2cd ns = n.x() * pauli_x() + n.y() * pauli_y() + n.z() * pauli_z();
    return std::cos(0.5 * Theta) * Matrix2cd::Identity() - iu * std::sin(0.5 * Theta) * ns;
  }
};

inline GateTarget target_z(double Theta) { return {0.0, 0.0, Theta}; }
inline GateTarget target_t() { return target_z(pi / 4); }
inline GateTarget target_h() { return {pi / 4, 0.0, pi}; }

// Coefficient layouts used throughout: "t-style" has free azimuthal drift
// (phi terms with half-integer frequency reach a nonzero endpoint, legal when
// the path starts at a pole), "h-style" pins theta around a tilted axis and
// ramps phi by a full turn.
inline AnsatzParams t_style_params(const std::array<double, 4>& a_theta,
                                   const std::array<double, 4>& a_phi, double tau = 1.0) {
  AnsatzParams p;
  p.tau = tau;
  for (int n = 1; n <= 4; ++n) {
    p.theta.terms.push_back({a_theta[n - 1], double(n), 2});
    p.phi.terms.push_back({a_phi[n - 1], 0.5, n + 1});
  }
  return p;
}

inline AnsatzParams h_style_params(const std::array<double, 4>& a_theta,
                                   const std::array<double, 4>& a_phi, double tau = 1.0) {
  AnsatzParams p;
  p.tau = tau;
  p.theta.base = {BaselineProfile::Kind::Constant, pi / 4};
  p.phi.base = {BaselineProfile::Kind::HalfSineSqRamp, 2 * pi};
  for (int n = 1; n <= 4; ++n) {
    p.theta.terms.push_back({a_theta[n - 1], double(n), 2});
    p.phi.terms.push_back({a_phi[n - 1], double(n), 2});
  }
  return p;
}

struct CyclicityReport {
  bool cyclic = false;
  bool at_pole = false;        // theta(0) at 0 or pi: phi endpoint is then irrelevant
  double theta_residual = 0.0; // |theta(tau) - theta(0)|
  double phi_residual = 0.0;   // |phi(tau) - phi(0)| mod 2*pi (0 when at_pole)

  std::string reason() const {
    if (cyclic) return at_pole ? "closed (polar start, phi endpoint free)" : "closed";
    std::string s = "open:";
    if (theta_residual > 0) s += " theta residual " + std::to_string(theta_residual);
    if (phi_residual > 0) s += " phi residual " + std::to_string(phi_residual);
    return s;
  }
};

inline CyclicityReport check_cyclicity(const AnsatzParams& p, double tol = 1e-8) {
  CyclicityReport r;
  const double th0 = p.theta.eval(0.0, p.tau);
  const double th1 = p.theta.eval(p.tau, p.tau);
  r.theta_residual = std::abs(th1 - th0);
  r.at_pole = std::abs(std::sin(th0)) < 1e-9;
  if (!r.at_pole) {
    r.phi_residual = std::abs(wrap_angle(p.phi.eval(p.tau, p.tau) - p.phi.eval(0.0, p.tau)));
  }
  r.cyclic = r.theta_residual < tol && r.phi_residual < tol;
  return r;
}

// Total accumulated phase integral(0..tau) [1 - cos theta] dphi.  The loop's
// two branch phases are -/+ half of it; the realized rotation angle about the
// start axis equals this value.
inline double geometric_phase(const AnsatzParams& p, int grid = 4000) {
  return simpson(
      [&](double t) {
        return (1.0 - std::cos(p.theta.eval(t, p.tau))) * p.phi.deriv(t, p.tau);
      },
      0.0, p.tau, grid);
}

// Same integral accumulated at each of grid+1 uniform nodes.
inline std::vector<double> running_geometric_phase(const AnsatzParams& p, int grid = 4000) {
  return cumulative_integral(
      [&](double t) {
        return (1.0 - std::cos(p.theta.eval(t, p.tau))) * p.phi.deriv(t, p.tau);
      },
      0.0, p.tau, grid);
}

// integral(0..tau) (1/2) sqrt[(dphi sin th cos th)^2 + dth^2] dt; equals the
// time-integral of the drive magnitude and is invariant under
// reparameterization of t.
inline double pulse_area(const AnsatzParams& p, int grid = 4000) {
  return simpson(
      [&](double t) {
        const TrajectoryPoint q = eval(p, t);
        const double x = q.dphi * std::sin(q.theta) * std::cos(q.theta);
        return 0.5 * std::hypot(x, q.dtheta);
      },
      0.0, p.tau, grid);
}

}  // namespace ongqg
