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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "ongqg/device.hpp"
#include "ongqg/table1.hpp"

namespace ongqg {
namespace {

TEST_CASE("first-kind Bessel inversion round-trips over the principal branch") {
  for (double y : {0.0, 0.05, 0.2, 0.4, 0.55, TwoQubitParams::bessel_j1_max()}) {
    const double x = bessel_j1_inverse(y);
    CHECK(std::cyl_bessel_j(1.0, x) == Catch::Approx(y).margin(1e-11));
  }
  CHECK(bessel_j1_inverse(0.3) < bessel_j1_inverse(0.5));
  // Values beyond the first peak clamp to the peak argument.
  CHECK(bessel_j1_inverse(0.99) ==
        Catch::Approx(TwoQubitParams::bessel_j1_argmax()).margin(1e-12));
  CHECK(std::cyl_bessel_j(1.0, TwoQubitParams::bessel_j1_argmax()) ==
        Catch::Approx(TwoQubitParams::bessel_j1_max()).margin(1e-14));
}

TEST_CASE("first sideband weight of the phase modulation is J1 of the depth") {
  // Fourier coefficient of e^{-i m} in e^{-i beta sin m}; this fixes both the
  // magnitude and the sign convention used by the drive mapping.
  const double beta = 0.9;
  auto re = [beta](double m) {
    return (std::exp(-iu * (beta * std::sin(m))) * std::exp(iu * m)).real();
  };
  auto im = [beta](double m) {
    return (std::exp(-iu * (beta * std::sin(m))) * std::exp(iu * m)).imag();
  };
  const double cr = simpson(re, 0.0, 2.0 * pi, 2000) / (2.0 * pi);
  const double ci = simpson(im, 0.0, 2.0 * pi, 2000) / (2.0 * pi);
  CHECK(cr == Catch::Approx(std::cyl_bessel_j(1.0, beta)).margin(1e-10));
  CHECK(std::abs(ci) < 1e-10);
}

TEST_CASE("drive mapping reproduces the control field through the first sideband") {
  const TwoQubitParams dev;
  const AnsatzParams p0 = table1_row(5, "CP").params();
  const AnsatzParams p = normalize_to_peak(p0, 0.8 * dev.omega_ceiling());
  const ControlField field = reverse_engineer(p);
  const ParametricDrive drv = map_controls_to_drive(field, dev);

  CHECK(drv.nu0 == Catch::Approx(dev.delta12 + dev.alpha2));
  for (double frac : {0.15, 0.4, 0.62, 0.87}) {
    const double t = frac * field.tau;
    const double expect = std::sqrt(2.0) * dev.g12 * std::cyl_bessel_j(1.0, drv.beta(t));
    CHECK(expect == Catch::Approx(std::abs(field.omega(t))).margin(1e-9 * dev.g12));
  }
  const double a_direct =
      simpson([&field](double t) { return 2.0 * field.delta(t); }, 0.0, field.tau, 4096);
  CHECK(drv.frame_phase == Catch::Approx(a_direct).margin(1e-6));
}

TEST_CASE("drive mapping rejects fields beyond the sideband ceiling") {
  const TwoQubitParams dev;
  const AnsatzParams p0 = table1_row(5, "CP").params();
  const AnsatzParams p = normalize_to_peak(p0, 1.2 * dev.omega_ceiling());
  CHECK_THROWS_AS(map_controls_to_drive(reverse_engineer(p), dev), std::domain_error);
}

TEST_CASE("effective model drives only the paired states") {
  const TwoQubitParams dev;
  const AnsatzParams p = normalize_to_peak(table1_row(5, "CP").params(),
                                           0.8 * dev.omega_ceiling());
  const ControlField field = reverse_engineer(p);
  const double t = 0.37 * field.tau;
  const Matrix6cd h = two_qubit_effective_hamiltonian(field, dev, t, 0.0, 0.0);
  CHECK(h(4, 4).real() == Catch::Approx(field.delta(t)));
  CHECK(h(3, 3).real() == Catch::Approx(-field.delta(t)));
  CHECK(h(4, 3) == field.omega(t));
  CHECK((h - h.adjoint()).norm() < 1e-14);
  // Untouched rows stay zero.
  CHECK(h.row(0).norm() == 0.0);
  CHECK(h.row(2).norm() == 0.0);
  CHECK(h.row(5).norm() == 0.0);
}

TEST_CASE("interaction-picture coupling matrix is hermitian with static diagonal error") {
  const TwoQubitParams dev;
  const AnsatzParams p = normalize_to_peak(table1_row(5, "CP").params(),
                                           0.8 * dev.omega_ceiling());
  const ControlField field = reverse_engineer(p);
  const ParametricDrive drv = map_controls_to_drive(field, dev);
  for (double frac : {0.1, 0.52, 0.93}) {
    const Matrix6cd h =
        two_qubit_interaction_hamiltonian(drv, dev, frac * field.tau, 0.013, -0.02);
    CHECK((h - h.adjoint()).norm() < 1e-12 * dev.g12);
    CHECK(std::abs(h(2, 1)) == Catch::Approx(dev.g12 * 1.013).margin(1e-9));
    CHECK(std::abs(h(3, 4)) == Catch::Approx(std::sqrt(2.0) * dev.g12 * 1.013).margin(1e-9));
  }
}

TEST_CASE("identity channel against the controlled-phase target scores 13/18") {
  CHECK(cp_product_fidelity(detail::comp_dyads(), 0.5 * pi) ==
        Catch::Approx(13.0 / 18.0).margin(1e-12));
  // A gamma = 0 target is realized exactly by the identity channel.
  CHECK(cp_product_fidelity(detail::comp_dyads(), 0.0) ==
        Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("doubly excited population decays at the sum of the relaxation rates") {
  const TwoQubitParams dev;
  HFun<6> h = [](double) { return Matrix6cd(Matrix6cd::Zero()); };
  Matrix6cd rho = Matrix6cd::Zero();
  rho(3, 3) = 1.0;  // |11>
  const double tau = 20.0;
  rho = propagate_lindblad<6>(h, two_qubit_noise(dev), rho, 0.0, tau, 4000);
  const double expect = std::exp(-(dev.gamma_minus1 + dev.gamma_minus2) * tau);
  CHECK(rho(3, 3).real() == Catch::Approx(expect).epsilon(1e-6));
  CHECK(std::abs(rho.trace() - cd(1.0)) < 1e-9);
}

TEST_CASE("full two-qubit model agrees with its first-sideband average") {
  // The decisive frame check: if the modulation phase, the sideband sign, or
  // the closing frame correction were wrong, the full model would realize a
  // visibly different gate than the effective pair model.
  const TwoQubitParams dev;
  const AnsatzParams p = normalize_to_peak(table1_row(5, "CP").params(),
                                           0.95 * dev.omega_ceiling());
  const ControlField field = reverse_engineer(p);

  CpSimOptions eff;
  eff.full_model = false;
  eff.with_noise = false;
  const CpResult re = cp_gate_sim(field, dev, eff);
  CHECK(re.fidelity > 0.995);

  CpSimOptions full = eff;
  full.full_model = true;
  const CpResult rf = cp_gate_sim(field, dev, full);
  INFO("effective " << re.fidelity << " full " << rf.fidelity
                    << " steps " << rf.steps);
  CHECK(std::abs(rf.fidelity - re.fidelity) < 1e-2);
}

TEST_CASE("full-model step choice is converged") {
  const TwoQubitParams dev;
  const AnsatzParams p = normalize_to_peak(table1_row(5, "CP").params(),
                                           0.95 * dev.omega_ceiling());
  const ControlField field = reverse_engineer(p);
  const CpFullSimulator sim1(field, dev);
  const CpFullSimulator sim2(field, dev, 2 * sim1.steps());
  const double f1 = sim1.fidelity(0.05, -0.05, true, 0.5 * pi);
  const double f2 = sim2.fidelity(0.05, -0.05, true, 0.5 * pi);
  INFO("steps " << sim1.steps() << " F " << f1 << " doubled " << f2);
  CHECK(std::abs(f1 - f2) < 1e-4);
}

TEST_CASE("three-level simulation matches the two-level gate when leakage is removed") {
  // Huge anharmonicity: the corrected three-level dynamics must collapse onto
  // the two-level propagation of the same field (which carries the tabulated
  // coefficients' small closure residual against the ideal target).
  TransmonParams dev;
  dev.alpha = 2 * pi * 30000.0;
  const Table1Row& row = table1_row(1, "H");
  SingleQubitSimOptions opt;
  opt.with_noise = false;
  opt.steps = 40000;
  const SingleQubitResult r = single_qubit_gate_sim(row.params(), row.target(), dev, opt);
  const AnsatzParams p = normalize_to_peak(row.params(), dev.omega_m);
  const double f2 = field_fidelity_six_state(reverse_engineer(p), row.target(),
                                             ErrorModel{0.0, 0.0, dev.omega_m},
                                             NoiseModel<2>{}, 8000);
  INFO("three-level " << r.fidelity << " two-level " << f2);
  CHECK(std::abs(r.fidelity - f2) < 1e-6);
  CHECK(r.leakage < 1e-8);
}

TEST_CASE("derivative correction removes most leakage at realistic anharmonicity") {
  const TransmonParams dev;
  for (const char* gate : {"T", "H"}) {
    const Table1Row& row = table1_row(1, gate);
    SingleQubitSimOptions on, off;
    on.with_noise = off.with_noise = false;
    on.steps = off.steps = 20000;
    on.drag = true;
    off.drag = false;
    const SingleQubitResult ron = single_qubit_gate_sim(row.params(), row.target(), dev, on);
    const SingleQubitResult roff = single_qubit_gate_sim(row.params(), row.target(), dev, off);
    INFO(gate << " leakage corrected " << ron.leakage << " bare " << roff.leakage);
    CHECK(ron.leakage * 10.0 <= roff.leakage);
    CHECK(ron.fidelity > roff.fidelity);
  }
}

TEST_CASE("detuning placement changes the correction only when an offset is present") {
  const TransmonParams dev;
  const Table1Row& row = table1_row(5, "T");
  SingleQubitSimOptions a, b;
  a.with_noise = b.with_noise = false;
  a.steps = b.steps = 12000;
  a.placement = DetuningPlacement::AfterCorrection;
  b.placement = DetuningPlacement::BeforeCorrection;

  const double f_a0 = single_qubit_gate_sim(row.params(), row.target(), dev, a).fidelity;
  const double f_b0 = single_qubit_gate_sim(row.params(), row.target(), dev, b).fidelity;
  CHECK(f_a0 == Catch::Approx(f_b0).margin(1e-12));

  a.eta = b.eta = 0.08;
  const double f_a = single_qubit_gate_sim(row.params(), row.target(), dev, a).fidelity;
  const double f_b = single_qubit_gate_sim(row.params(), row.target(), dev, b).fidelity;
  CHECK(std::abs(f_a - f_b) > 1e-9);
}

TEST_CASE("reference loop runs on the three-level device") {
  const TransmonParams dev;
  const GateTarget g = target_t();
  const SingleLoop loop = single_loop_for(g, dev.omega_m);
  SingleQubitSimOptions opt;
  opt.with_noise = false;
  opt.steps = 20000;
  const SingleQubitResult r = single_qubit_loop_sim(loop, g, dev, opt);
  CHECK(r.fidelity > 0.98);
  CHECK(r.leakage < 0.02);
  CHECK(r.tau == Catch::Approx(loop.T));
}

TEST_CASE("two-level scheme comparison helpers agree with direct propagation") {
  const Table1Row& row = table1_row(2, "T");
  const AnsatzParams p = normalize_to_peak(row.params(), 1.0);
  const ControlField field = reverse_engineer(p);
  const GateTarget g = row.target();
  const NoiseModel<2> none{};
  const double f = field_fidelity_six_state(field, g, ErrorModel{0.0, 0.0, 1.0}, none, 4000);
  CHECK(f > 1.0 - 1e-4);

  const SingleLoop loop = single_loop_for(g, 1.0);
  const double fl = loop_fidelity_six_state(loop, g, ErrorModel{0.0, 0.0, 1.0}, none, 4000);
  CHECK(fl > 1.0 - 1e-6);
}

}  // namespace
}  // namespace ongqg
