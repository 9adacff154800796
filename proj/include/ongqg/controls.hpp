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

// Control synthesis.  A trajectory (theta, phi) is driven exactly by
//   H(t) = Delta |0><0| - Delta |1><1| + Omega |0><1| + conj(Omega) |1><0|
// with Delta = sin^2(theta) dphi/2 and
// Omega = -i e^{-i phi} (dtheta - i sin th cos th dphi)/2.  Along this field
// the auxiliary states are parallel-transported: <mu_k|H|mu_k> = 0.

#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

#include "ongqg/math.hpp"
#include "ongqg/trajectory.hpp"

namespace ongqg {

struct ControlField {
  double tau = 1.0;
  std::function<double(double)> delta;
  std::function<cd(double)> omega;
  std::function<cd(double)> domega;  // time derivative; empty when not available

  Matrix2cd hamiltonian(double t) const {
    const double d = delta(t);
    const cd o = omega(t);
    Matrix2cd h;
    h << d, o, std::conj(o), -d;
    return h;
  }
  double omega_max(int grid = 4000) const {
    double m = 0.0;
    for (int k = 0; k <= grid; ++k) m = std::max(m, std::abs(omega(tau * k / grid)));
    return m;
  }
  // Time-integral of |Omega|.
  double area(int grid = 4000) const {
    return simpson([&](double t) { return std::abs(omega(t)); }, 0.0, tau, grid);
  }
};

inline cd omega_of(const AnsatzParams& p, double t) {
  const TrajectoryPoint q = eval(p, t);
  const double sc = std::sin(q.theta) * std::cos(q.theta);
  return -iu * std::exp(-iu * q.phi) * 0.5 * (q.dtheta - iu * sc * q.dphi);
}

inline cd domega_of(const AnsatzParams& p, double t) {
  const TrajectoryPoint q = eval(p, t);
  const double d2th = p.theta.deriv2(t, p.tau);
  const double d2ph = p.phi.deriv2(t, p.tau);
  const double s = std::sin(q.theta), c = std::cos(q.theta);
  const cd inner = q.dtheta - iu * s * c * q.dphi;
  const cd dinner = d2th - iu * ((c * c - s * s) * q.dtheta * q.dphi + s * c * d2ph);
  return -iu * std::exp(-iu * q.phi) * 0.5 * (dinner - iu * q.dphi * inner);
}

inline ControlField reverse_engineer(const AnsatzParams& p) {
  ControlField f;
  f.tau = p.tau;
  f.delta = [p](double t) {
    const double th = p.theta.eval(t, p.tau);
    return 0.5 * std::sin(th) * std::sin(th) * p.phi.deriv(t, p.tau);
  };
  f.omega = [p](double t) { return omega_of(p, t); };
  f.domega = [p](double t) { return domega_of(p, t); };
  return f;
}

// Rescales the duration so the drive magnitude peaks at omega_m; the path
// shape (and hence the pulse area) is unchanged.
inline AnsatzParams normalize_to_peak(const AnsatzParams& p, double omega_m, int grid = 4000) {
  const double peak = reverse_engineer(p).omega_max(grid);
  AnsatzParams out = p;
  out.tau = p.tau * peak / omega_m;
  return out;
}

// ----- single-loop reference scheme ------------------------------------------------
//
// Orange-slice loop with a sin^2 envelope: starting at (theta_c, phi), run to
// the north pole, down the meridian phi+gamma to the south pole, and back up
// to the start.  Resonant segments with phases phi-pi/2, phi+gamma+pi/2,
// phi-pi/2; envelope area splits theta_c / pi / pi-theta_c.  Closed form of
// the loop unitary: cos(gamma) I + i sin(gamma) n.sigma.

struct SingleLoopSpec {
  double theta_c = 0.0;
  double phi = 0.0;
  double gamma = 0.0;
  double omega_m = 2.0;  // envelope peak of Omega_c; drive magnitude |Omega| peaks at half this
};

struct SingleLoop {
  SingleLoopSpec spec;
  double T = 0.0;   // total duration, 4*pi/omega_m
  double T1 = 0.0;  // envelope area reaches theta_c
  double T2 = 0.0;  // envelope area reaches theta_c + pi

  double envelope(double t) const {
    const double s = std::sin(pi * t / T);
    return spec.omega_m * s * s;
  }
  // integral(0..t) of the envelope.
  double envelope_area(double t) const {
    return spec.omega_m * (0.5 * t - (T / (4.0 * pi)) * std::sin(2.0 * pi * t / T));
  }
  double segment_phase(double t) const {
    if (t < T1 || t >= T2) return spec.phi - 0.5 * pi;
    return spec.phi + spec.gamma + 0.5 * pi;
  }

  ControlField field() const {
    SingleLoop me = *this;
    ControlField f;
    f.tau = T;
    f.delta = [](double) { return 0.0; };
    f.omega = [me](double t) {
      return 0.5 * me.envelope(t) * std::exp(-iu * me.segment_phase(t));
    };
    f.domega = [me](double t) {
      const double denv = me.spec.omega_m * (pi / me.T) * std::sin(2.0 * pi * t / me.T);
      return 0.5 * denv * std::exp(-iu * me.segment_phase(t));
    };
    return f;
  }

  // Per-segment field with the phase pinned to one side of the jump, so a
  // quadrature or propagation node landing exactly on a boundary takes the
  // correct one-sided limit.  Segments: 0 = [0,T1], 1 = [T1,T2], 2 = [T2,T].
  double phase_of_segment(int seg) const {
    return seg == 1 ? spec.phi + spec.gamma + 0.5 * pi : spec.phi - 0.5 * pi;
  }
  ControlField segment_field(int seg) const {
    SingleLoop me = *this;
    const double ph = phase_of_segment(seg);
    ControlField f;
    f.tau = T;
    f.delta = [](double) { return 0.0; };
    f.omega = [me, ph](double t) { return 0.5 * me.envelope(t) * std::exp(-iu * ph); };
    f.domega = [me, ph](double t) {
      const double denv = me.spec.omega_m * (pi / me.T) * std::sin(2.0 * pi * t / me.T);
      return 0.5 * denv * std::exp(-iu * ph);
    };
    return f;
  }

  Matrix2cd unitary() const {
    const GateTarget g{spec.theta_c, spec.phi, 0.0};
    const Eigen::Vector3d n = g.axis();
    const Matrix2cd ns = n.x() * pauli_x() + n.y() * pauli_y() + n.z() * pauli_z();
    return std::cos(spec.gamma) * Matrix2cd::Identity() + iu * std::sin(spec.gamma) * ns;
  }

  // The loop expressed as (theta(t), phi(t)) for the error integrals; the
  // segment index pins boundary nodes to the correct one-sided limit.
  TrajectoryPoint path(double t, int seg) const {
    const double A = envelope_area(t);
    TrajectoryPoint q;
    q.t = t;
    q.dphi = 0.0;
    if (seg == 0) {
      q.theta = spec.theta_c - A;
      q.dtheta = -envelope(t);
      q.phi = spec.phi;
    } else if (seg == 1) {
      q.theta = A - spec.theta_c;
      q.dtheta = envelope(t);
      q.phi = spec.phi + spec.gamma;
    } else {
      q.theta = 2.0 * pi + spec.theta_c - A;
      q.dtheta = -envelope(t);
      q.phi = spec.phi;
    }
    return q;
  }
  TrajectoryPoint path(double t) const { return path(t, t < T1 ? 0 : t < T2 ? 1 : 2); }

  // Accumulated phase integral [1-cos theta] dphi along the loop: the only
  // contribution is the azimuth jump -gamma at the south-pole crossing, where
  // 1-cos(theta) = 2.
  double running_phase_of_segment(int seg) const { return seg == 2 ? -2.0 * spec.gamma : 0.0; }
  double running_phase(double t) const { return t < T2 ? 0.0 : -2.0 * spec.gamma; }
};

inline SingleLoop single_loop_build(const SingleLoopSpec& spec) {
  SingleLoop loop;
  loop.spec = spec;
  loop.T = 4.0 * pi / spec.omega_m;
  const double tol = 1e-12 * loop.T;
  auto hit = [&](double area) {
    return bisect([&](double t) { return loop.envelope_area(t) - area; }, 0.0, loop.T, tol);
  };
  loop.T1 = spec.theta_c > 0.0 ? hit(spec.theta_c) : 0.0;
  loop.T2 = hit(spec.theta_c + pi);
  return loop;
}

// Reference loop for the same gate at matched drive magnitude: |Omega| of
// both schemes peaks at field_peak.  The loop's accumulated phase is -2*gamma
// (the azimuth jump sits at the south pole), so realizing the rotation
// exp(-i Theta/2 n.sigma) needs gamma = -Theta/2.
inline SingleLoop single_loop_for(const GateTarget& g, double field_peak) {
  return single_loop_build({g.theta0, g.phi0, -0.5 * g.Theta, 2.0 * field_peak});
}

// ----- derivative correction for a weakly anharmonic third level -------------------
//
// Drive vector b = (2 Re Omega, -2 Im Omega, 2 Delta) reproduces H above as
// (1/2) b.S on the two lowest levels of the three-level ladder
//   S_x = sum_b sqrt(b)(|b><b-1| + |b-1><b|),  S_y likewise with i, -i,
//   S_z = diag(1, -1, -3),
// under H3 = (1/2) b.S - alpha |2><2|.  First-order correction: eliminating
// the 1-2 coupling sqrt(2) Omega with the dressing |1~> = |1> + sqrt(2)(Omega
// + dOmega)/alpha |2> leaves the residual drive dOmega = (2 Delta Omega - i
// dOmega/dt)/alpha, i.e.
//   bd_x = (b_z b_x - db_y/dt) / alpha,
//   bd_y = (db_x/dt + b_z b_y) / alpha,
// and the z component cancels the quadratic level shift of the dressing,
//   bd_z = -(b_x^2 + b_y^2) / (2 alpha).

inline Eigen::Vector3d drive_vector(double delta, cd omega) {
  return {2.0 * omega.real(), -2.0 * omega.imag(), 2.0 * delta};
}

inline Eigen::Vector3d drag_correction(const Eigen::Vector3d& b, const Eigen::Vector3d& bdot,
                                       double alpha) {
  return {(b.z() * b.x() - bdot.y()) / alpha,
          (bdot.x() + b.z() * b.y()) / alpha,
          -(b.x() * b.x() + b.y() * b.y()) / (2.0 * alpha)};
}

struct DragField {
  double tau = 1.0;
  double alpha = 0.0;
  std::function<Eigen::Vector3d(double)> b0;
  std::function<Eigen::Vector3d(double)> bd;
};

// Builds the corrected drive from a control field.  Uses the field's analytic
// derivative when present, otherwise a centered difference.
inline DragField drag_correct(const ControlField& field, double alpha) {
  DragField d;
  d.tau = field.tau;
  d.alpha = alpha;
  auto b0 = [field](double t) { return drive_vector(field.delta(t), field.omega(t)); };
  std::function<cd(double)> domega = field.domega;
  if (!domega) {
    const double h = field.tau * 1e-6;
    domega = [field, h](double t) {
      const double lo = std::max(0.0, t - h), hi = std::min(field.tau, t + h);
      return (field.omega(hi) - field.omega(lo)) / (hi - lo);
    };
  }
  d.b0 = b0;
  d.bd = [b0, domega, alpha](double t) {
    const cd dom = domega(t);
    const Eigen::Vector3d bdot{2.0 * dom.real(), -2.0 * dom.imag(), 0.0};
    return drag_correction(b0(t), bdot, alpha);
  };
  return d;
}

inline Matrix3cd ladder_sx() {
  Matrix3cd m = Matrix3cd::Zero();
  m(0, 1) = m(1, 0) = 1.0;
  m(1, 2) = m(2, 1) = std::sqrt(2.0);
  return m;
}

inline Matrix3cd ladder_sy() {
  Matrix3cd m = Matrix3cd::Zero();
  m(1, 0) = iu;
  m(0, 1) = -iu;
  m(2, 1) = iu * std::sqrt(2.0);
  m(1, 2) = -iu * std::sqrt(2.0);
  return m;
}

inline Matrix3cd ladder_sz() {
  Matrix3cd m = Matrix3cd::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  m(2, 2) = -3.0;
  return m;
}

// Three-level Hamiltonian for the (possibly corrected) drive. The correction
// can be switched off to expose the bare leakage.
inline Matrix3cd drag_hamiltonian_3level(const DragField& d, double t, bool use_correction = true) {
  Eigen::Vector3d b = d.b0(t);
  if (use_correction) b += d.bd(t);
  Matrix3cd h = 0.5 * (b.x() * ladder_sx() + b.y() * ladder_sy() + b.z() * ladder_sz());
  h(2, 2) -= d.alpha;
  return h;
}

}  // namespace ongqg
