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
#include <span>
#include <string_view>
#include <vector>

#include "projstat/types.hpp"

namespace projstat::analytic {

enum class Method { kClosedForm, kQuadrature, kResidue };

std::string_view to_string(Method method);

struct DensityValue {
  double value = 0.0;
  Method method = Method::kClosedForm;
  double est_error = 0.0;
  /// Orthogonal point closer than eps_ts to the line t1 + t2 = 1.
  bool near_singular = false;
};

struct Options {
  /// Half-width of the strip around t1 + t2 = 1 treated as near-singular for
  /// the orthogonal ensemble.
  double eps_ts = 1e-3;
  /// Absolute target accuracy of quadrature-based densities.
  double abs_tol = 1e-10;
  int max_intervals = 4000;
};

/// Remaining one-dimensional integrand of the two-point density,
///
///   f(s) = alpha(s)^{-m} beta(s)^{-k} (1 + i s ts)^{-c},
///   alpha = 1 + i s t1,  beta = 1 - i s (1 - t1),  ts = t1 + t2 - 1,
///
/// with m = (N-K-1)/2, k = (K-1)/2, c = 1/2 for O(N) and m = N-K-1,
/// k = K-1, c = 1 for U(N). The density is prefactor() * onepoint(t2) *
/// Int f(s) ds. Every base has real part 1 on the real axis, so principal
/// branch powers are continuous along the path.
struct TwoPointIntegrand {
  EnsembleKind ensemble;
  int n;
  int k;
  double t1;
  double t2;
  double m_exponent;
  double k_exponent;
  double ts;

  static TwoPointIntegrand make(EnsembleKind ensemble, int n, int k, double t1,
                                double t2);

  std::complex<double> operator()(double s) const;
  /// (N-3)/(4 pi) for O(N), (N-2)/(2 pi) for U(N).
  double prefactor() const;
};

/// Beta law of a single projection probability:
/// O(N): Gamma(N/2)/(Gamma((N-K)/2)Gamma(K/2)) t^{K/2-1} (1-t)^{(N-K)/2-1},
/// U(N): Gamma(N)/(Gamma(N-K)Gamma(K)) t^{K-1} (1-t)^{N-K-1}.
/// At t = 0 or 1 the limit is returned when finite; a diverging endpoint
/// throws ErrorCode::kSingularity.
DensityValue onepoint_density(EnsembleKind ensemble, int n, int k, double t);

/// Two-point density by adaptive quadrature of the remaining s-integral.
/// Requires N >= 4 (orthogonal) or N >= 3 (unitary).
DensityValue twopoint_quadrature(EnsembleKind ensemble, int n, int k,
                                 double t1, double t2, const Options& options = {});

/// Two-point density by the residue theorem, with residues at the order-p
/// poles extracted from truncated Taylor series of the regular factors.
/// Orthogonal case needs K odd and N even; refuses |t1 + t2 - 1| < eps_ts.
DensityValue twopoint_residue(EnsembleKind ensemble, int n, int k, double t1,
                              double t2, const Options& options = {});

/// O(4), K = 2: K(2 sqrt(ab)/(a+b)) / (pi (a+b)), a = sqrt(t1 t2),
/// b = sqrt((1-t1)(1-t2)). Diverges logarithmically on t1 + t2 = 1.
DensityValue closed_form_P42(double t1, double t2);

/// U(4), K = 2: 12 t1 t2 below the anti-diagonal, 12 (1-t1)(1-t2) above.
DensityValue closed_form_U42(double t1, double t2);

/// Normalization constant Z(0) of the R = 2 formula:
/// Gamma((N-1)/2)/(sqrt(pi) Gamma(N/2)) for O(N), 1/(pi (N-1)) for U(N).
double z_zero(EnsembleKind ensemble, int n);

bool residue_supported(EnsembleKind ensemble, int n, int k);

/// Method density_auto() uses away from the singular line: the closed form
/// for N = 4, K = 2, residues where parity allows, quadrature otherwise.
Method preferred_method(EnsembleKind ensemble, int n, int k);

DensityValue density_auto(EnsembleKind ensemble, int n, int k, double t1,
                          double t2, const Options& options = {});

struct GridPoint {
  double t1;
  double t2;
  DensityValue density;
  /// The density diverges at this point (value is +inf).
  bool singular = false;
};

/// density_auto over the tensor grid t1s x t2s (row-major in t1), spread
/// across up to `threads` workers. Points on a divergence are reported with
/// singular = true instead of throwing.
std::vector<GridPoint> density_grid(EnsembleKind ensemble, int n, int k,
                                    std::span<const double> t1s,
                                    std::span<const double> t2s,
                                    const Options& options = {}, int threads = 1);

}  // namespace projstat::analytic
