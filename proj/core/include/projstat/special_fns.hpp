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

#include <complex>
#include <vector>

namespace projstat::special {

/// log Gamma(x) for x > 0 (Lanczos, g = 7, with reflection below 1/2).
double log_gamma(double x);

/// Prod Gamma(numerator) / Prod Gamma(denominator), accumulated in log space
/// so that arguments up to several hundred do not overflow.
struct GammaRatio {
  std::vector<double> numerator;
  std::vector<double> denominator;

  double log_value() const;
  double value() const;
};

/// Density of Beta(k, m) at t written in the (m, k) convention used by the
/// projection-probability laws: Gamma(m+k)/(Gamma(m)Gamma(k)) t^{k-1}
/// (1-t)^{m-1}. Requires m, k > 0 and t in (0, 1).
double beta_density(double m, double k, double t);

/// I_mk(a, b) = (m+k-1) Int ds/2pi (1 + i a s)^{-m} (1 - i b s)^{-k}
///            = Gamma(m+k)/(Gamma(m)Gamma(k)) a^{k-1} b^{m-1} / (a+b)^{m+k-1}.
///
/// m, k positive integers or half-integers with m + k >= 2; 0 < a, b < 1.
double i_mk(double m, double k, double a, double b);

/// Same integral with shifted constants: (alpha + i a s)^{-m} (beta - i b s)^{-k}.
/// Equals i_mk(m, k, a, b) ((a+b)/(beta a + alpha b))^{m+k-1}, principal
/// branch. Requires Re(alpha), Re(beta) >= 1.
std::complex<double> i_mk_generalized(double m, double k,
                                      std::complex<double> alpha, double a,
                                      std::complex<double> beta, double b);

/// Arithmetic-geometric mean of two nonnegative numbers.
double agm(double x, double y);

/// Complete elliptic integral of the first kind in the modulus convention,
/// K(k) = Int_0^{pi/2} dphi / sqrt(1 - k^2 sin^2 phi), 0 <= k < 1.
double elliptic_k(double modulus);

/// K expressed through the complementary modulus k' = sqrt(1 - k^2), 0 < k' <= 1.
/// Loses no precision as k -> 1, where forming 1 - k^2 would cancel.
double elliptic_k_from_complement(double complementary_modulus);

/// (1/2pi) Int dtau (1 + c tau^2)^{-m} = Gamma(m-1/2) / (2 sqrt(pi c) Gamma(m)).
double lorentzian_1d(double c, double m);

/// (1/4pi^2) Int d^2tau (1 + c |tau|^2)^{-m} = 1 / (4 pi c (m-1)), m > 1.
double lorentzian_2d(double c, double m);

}  // namespace projstat::special
