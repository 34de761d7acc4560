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

#include "projstat/conductance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "projstat/error.hpp"
#include "projstat/montecarlo.hpp"
#include "projstat/quadrature.hpp"
#include "projstat/sampling.hpp"

namespace projstat::conductance {
namespace {

ConductanceDensity from_histogram(const montecarlo::Density1D& d, EnsembleKind ensemble) {
  ConductanceDensity out;
  out.grid = d.centers;
  out.bin_edges = d.edges;
  out.values = d.values;
  out.method = Method::kMonteCarlo;
  out.seed = d.seed;
  out.draws = d.draws;
  out.mean = d.mean;
  out.std_error = d.std_error;
  out.physical = ensemble == EnsembleKind::kUnitary;
  return out;
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kClosedForm: return "closed_form";
    case Method::kConvolution: return "convolution";
    case Method::kMonteCarlo: return "monte_carlo";
  }
  return "unknown";
}

int g_max(int n, int k) {
  ProjectionConfig::make(n, k, 1);
  return std::min(k, n - k);
}

double p_g_closed_42(double g) {
  if (!(g > 0.0 && g < 2.0)) return 0.0;
  if (g <= 1.0) return 2.0 * g * g * g;
  const double h = 2.0 - g;
  return 2.0 * h * h * h;
}

double pair_sum_density(EnsembleKind ensemble, int n, int k, double s,
                        const ConvolutionOptions& options) {
  if (!(s > 0.0 && s < 2.0)) {
    // Validate the configuration even when the answer is trivially zero.
    analytic::TwoPointIntegrand::make(ensemble, n, k, 0.5, 0.5);
    return 0.0;
  }
  const double lo = std::max(0.0, s - 1.0);
  const double hi = std::min(1.0, s);
  const analytic::Options dopts = options.density;
  quadrature::Options qopts;
  qopts.abs_tol = options.abs_tol;
  qopts.rel_tol = 1e-12;
  qopts.max_intervals = options.max_intervals;
  const auto result = quadrature::gauss_kronrod(
      [&](double t) {
        return analytic::density_auto(ensemble, n, k, t, s - t, dopts).value;
      },
      lo, hi, qopts);
  return result.value;
}

bool convolution_supported(int n, int k) {
  ProjectionConfig::make(n, k, 1);
  return n - k == 2 || k == 2;
}

double p_g_convolution(EnsembleKind ensemble, int n, int k, double g,
                       const ConvolutionOptions& options) {
  if (!convolution_supported(n, k)) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "p(g) by convolution needs N-K = 2 or K = 2 (got N=" +
                    std::to_string(n) + ", K=" + std::to_string(k) +
                    "); use Monte Carlo");
  }
  const int subspace = n - k == 2 ? k : n - k;
  return pair_sum_density(ensemble, n, subspace, g, options);
}

ConductanceDensity p_g_monte_carlo(EnsembleKind ensemble, int n, int k,
                                   std::uint64_t draws, int bins,
                                   std::uint64_t seed, int threads) {
  const int top = g_max(n, k);
  if (bins < 2) throw Error(ErrorCode::kDomain, "conductance histogram needs at least 2 bins");
  const auto d = montecarlo::scalar_density(
      draws, bins, 0.0, static_cast<double>(top), seed, threads, [&](Rng& rng) {
        const auto frame = sampling::sample_haar(ensemble, n, rng);
        const auto t = sampling::partial_conductances(frame, k);
        double g = 0.0;
        for (double x : t) g += x;
        return std::min(g, static_cast<double>(top));
      });
  return from_histogram(d, ensemble);
}

ConductanceDensity weighted_g_monte_carlo(EnsembleKind ensemble, int n, int k,
                                          std::span<const double> weights,
                                          std::uint64_t draws, int bins,
                                          std::uint64_t seed, int threads) {
  ProjectionConfig::make(n, k, 1);
  if (static_cast<int>(weights.size()) != n - k) {
    throw Error(ErrorCode::kInvalidWeights,
                "need one weight per transmitting channel (N-K = " +
                    std::to_string(n - k) + ", got " + std::to_string(weights.size()) + ")");
  }
  if (bins < 2) throw Error(ErrorCode::kDomain, "conductance histogram needs at least 2 bins");
  std::vector<double> w(weights.begin(), weights.end());
  sampling::weighted_mixture_prob(std::vector<double>(w.size(), 0.0), w);
  const auto d =
      montecarlo::scalar_density(draws, bins, 0.0, 1.0, seed, threads, [&](Rng& rng) {
        const auto frame = sampling::sample_haar(ensemble, n, rng);
        return sampling::weighted_mixture_prob(sampling::partial_conductances(frame, k), w);
      });
  return from_histogram(d, ensemble);
}

double trapezoid(std::span<const double> grid, std::span<const double> values) {
  if (grid.size() != values.size()) {
    throw Error(ErrorCode::kDomain, "grid and values differ in length");
  }
  double sum = 0.0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    sum += 0.5 * (grid[i] - grid[i - 1]) * (values[i] + values[i - 1]);
  }
  return sum;
}

}  // namespace projstat::conductance
