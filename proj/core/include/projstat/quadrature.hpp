// Copyright 2026 The projstat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace projstat::quadrature {

struct Result {
  double value = 0.0;
  double abs_error = 0.0;
  int intervals = 0;
  bool converged = false;
};

struct Options {
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
  int max_intervals = 4000;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 7/15-point Gauss-Kronrod on [a, b]. The interval with
/// the largest error estimate is bisected until the summed estimate meets
/// max(abs_tol, rel_tol |value|) or the interval budget runs out.
/// The integrand is never evaluated at the endpoints.
Result gauss_kronrod(const Integrand& f, double a, double b,
                     const Options& options = {});

/// Same, with the range pre-split at the interior `breakpoints` (sorted or
/// not; values outside (a, b) are ignored). Useful when f has a known kink or
/// integrable singularity inside the range.
Result gauss_kronrod(const Integrand& f, double a, double b,
                     std::span<const double> breakpoints,
                     const Options& options = {});

/// Int_0^inf f(s) ds for f decaying at least like s^{-3/2}.
///
/// Uses s = tan(theta) written as s = cot(phi), phi = pi/2 - theta, and
/// phi = (pi/2) w^2 on w in (0, 1), which removes the endpoint singularity
/// that slow algebraic decay leaves at theta = pi/2.
Result half_line(const Integrand& f, const Options& options = {});

/// n-point Gauss-Legendre nodes and weights on [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
Rule gauss_legendre(int n);

}  // namespace projstat::quadrature
