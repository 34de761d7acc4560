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

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "projstat/analytic.hpp"
#include "projstat/types.hpp"

namespace projstat::conductance {

enum class Method { kClosedForm, kConvolution, kMonteCarlo };

std::string_view to_string(Method method);

/// Upper end of the support of g, min(K, N-K).
int g_max(int n, int k);

/// U(4), K = 2: 2 g^3 on [0, 1], 2 (2-g)^3 on [1, 2], zero elsewhere.
double p_g_closed_42(double g);

struct ConvolutionOptions {
  analytic::Options density;
  double abs_tol = 1e-10;
  int max_intervals = 200;
};

/// Density of t1 + t2 under the two-point law of (ensemble, N, K):
/// Int density(t, s - t) dt over t in [max(0, s-1), min(1, s)].
/// Zero at and beyond the support ends s = 0 and s = 2.
double pair_sum_density(EnsembleKind ensemble, int n, int k, double s,
                        const ConvolutionOptions& options = {});

/// True when g is a sum of two partial conductances, N-K = 2 (two
/// transmitting columns) or K = 2 (two rows, by transposition).
bool convolution_supported(int n, int k);

/// p(g) by convolution of a two-point density. N-K = 2 uses the (N, K) law
/// of the two transmitting columns; K = 2 uses the (N, N-K) law of the two
/// rows of the block. Other shapes throw kUnsupportedDimension.
double p_g_convolution(EnsembleKind ensemble, int n, int k, double g,
                       const ConvolutionOptions& options = {});

/// Tabulated p(g).
struct ConductanceDensity {
  /// Evaluation points; bin centers for Monte Carlo.
  std::vector<double> grid;
  /// Bin edges (Monte Carlo only).
  std::vector<double> bin_edges;
  std::vector<double> values;
  Method method = Method::kMonteCarlo;
  std::uint64_t seed = 0;
  std::uint64_t draws = 0;
  double mean = 0.0;
  double std_error = 0.0;
  /// Conductance physics applies to the unitary ensemble only; orthogonal
  /// runs are a mechanical extension.
  bool physical = true;
};

/// Histogram of g over [0, min(K, N-K)] from full Haar draws, reading the
/// partial conductances off the upper-right K x (N-K) block.
ConductanceDensity p_g_monte_carlo(EnsembleKind ensemble, int n, int k,
                                   std::uint64_t draws, int bins,
                                   std::uint64_t seed, int threads = 1);

/// Occupation-weighted conductance sum_xi p_xi t_xi over the N-K partial
/// conductances, on [0, 1]. Monte Carlo only.
ConductanceDensity weighted_g_monte_carlo(EnsembleKind ensemble, int n, int k,
                                          std::span<const double> weights,
                                          std::uint64_t draws, int bins,
                                          std::uint64_t seed, int threads = 1);

/// Trapezoidal integral of values over grid.
double trapezoid(std::span<const double> grid, std::span<const double> values);

}  // namespace projstat::conductance
