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

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace ongqg {

using cd = std::complex<double>;
using Eigen::Matrix2cd;
using Eigen::Matrix3cd;
using Eigen::Matrix4cd;
using Eigen::MatrixXcd;
using Eigen::Vector2cd;
using Matrix6cd = Eigen::Matrix<cd, 6, 6>;
using Vector6cd = Eigen::Matrix<cd, 6, 1>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr cd iu{0.0, 1.0};

// Remainder of x in [-period/2, period/2].
inline double wrap_angle(double x, double period = 2.0 * pi) {
  return std::remainder(x, period);
}

// Composite Simpson rule with n uniform intervals (n rounded up to even).
template <typename F>
auto simpson(F&& f, double a, double b, int n) -> decltype(f(a)) {
  if (n < 2) n = 2;
  if (n % 2) ++n;
  const double h = (b - a) / n;
  auto acc = f(a) + f(b);
  for (int k = 1; k < n; ++k) acc += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
  return acc * (h / 3.0);
}

// Simpson on already-sampled values over a uniform grid (size odd).
template <typename T>
T simpson_samples(const std::vector<T>& y, double h) {
  const int n = static_cast<int>(y.size()) - 1;
  if (n < 2 || n % 2) throw std::invalid_argument("simpson_samples: need even interval count");
  T acc = y.front() + y.back();
  for (int k = 1; k < n; ++k) acc += (k % 2 ? 4.0 : 2.0) * y[k];
  return acc * (h / 3.0);
}

// Cumulative integral at the n+1 grid nodes; each interval uses Simpson with a
// midpoint evaluation, so the node values carry O(h^4) error like simpson().
template <typename F>
std::vector<double> cumulative_integral(F&& f, double a, double b, int n) {
  std::vector<double> out(n + 1, 0.0);
  const double h = (b - a) / n;
  double fk = f(a);
  for (int k = 0; k < n; ++k) {
    const double t0 = a + k * h;
    const double fm = f(t0 + 0.5 * h);
    const double f1 = f(t0 + h);
    out[k + 1] = out[k] + (h / 6.0) * (fk + 4.0 * fm + f1);
    fk = f1;
  }
  return out;
}

// Root of monotone f on [lo, hi] by bisection. Requires sign change.
template <typename F>
double bisect(F&& f, double lo, double hi, double tol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0)) throw std::invalid_argument("bisect: no sign change");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline Matrix2cd pauli_x() {
  Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

inline Matrix2cd pauli_y() {
  Matrix2cd m;
  m << 0, cd(0, -1), cd(0, 1), 0;
  return m;
}

inline Matrix2cd pauli_z() {
  Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

inline std::vector<double> linspace(double a, double b, int n_points) {
  std::vector<double> t(n_points);
  for (int i = 0; i < n_points; ++i) t[i] = a + (b - a) * i / (n_points - 1);
  return t;
}

}  // namespace ongqg
