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

#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>

#include "projstat/error.hpp"
#include "projstat/montecarlo.hpp"
#include "projstat/sampling.hpp"

namespace projstat::conductance {
namespace {

constexpr auto kO = EnsembleKind::kOrthogonal;
constexpr auto kU = EnsembleKind::kUnitary;

double integrate(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 15, 1e-12);
}

// Chi-square p-value of a 1D Monte Carlo histogram against a density, with
// expected counts from bin integrals.
double histogram_p_value(const montecarlo::Density1D& d,
                         const std::function<double(double)>& p) {
  double chi2 = 0.0;
  int groups = 0;
  double obs = 0.0, exp = 0.0;
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    const double w = d.edges[i + 1] - d.edges[i];
    obs += d.values[i] * w * static_cast<double>(d.draws);
    exp += integrate(p, d.edges[i], d.edges[i + 1]) * static_cast<double>(d.draws);
    if (exp >= 5.0 || i + 1 == d.values.size()) {
      chi2 += (obs - exp) * (obs - exp) / exp;
      ++groups;
      obs = exp = 0.0;
    }
  }
  return montecarlo::chi2_p_value(chi2, groups - 1);
}

montecarlo::Density1D as_density(const ConductanceDensity& c) {
  montecarlo::Density1D d;
  d.edges = c.bin_edges;
  d.centers = c.grid;
  d.values = c.values;
  d.draws = c.draws;
  return d;
}

TEST(ClosedForm42, Values) {
  EXPECT_DOUBLE_EQ(p_g_closed_42(1.0), 2.0);
  EXPECT_DOUBLE_EQ(p_g_closed_42(0.5), 0.25);
  EXPECT_DOUBLE_EQ(p_g_closed_42(1.5), 0.25);
  EXPECT_DOUBLE_EQ(p_g_closed_42(2.0), 0.0);
  EXPECT_DOUBLE_EQ(p_g_closed_42(0.0), 0.0);
  EXPECT_DOUBLE_EQ(p_g_closed_42(-0.1), 0.0);
  EXPECT_DOUBLE_EQ(p_g_closed_42(2.5), 0.0);
  EXPECT_NEAR(integrate(p_g_closed_42, 0, 2), 1.0, 1e-14);
}

TEST(Convolution, ReproducesTheClosedForm) {
  for (double g = 0.0; g <= 2.0 + 1e-12; g += 0.05) {
    EXPECT_NEAR(p_g_convolution(kU, 4, 2, g), p_g_closed_42(g), 1e-8) << g;
  }
  EXPECT_NEAR(p_g_convolution(kU, 4, 2, 0.5), 0.25, 1e-10);
  EXPECT_NEAR(p_g_convolution(kU, 4, 2, 1.5), 0.25, 1e-10);
}

TEST(Convolution, SixTwoIsNormalizedWithTheRightMean) {
  const auto p = [](double g) { return p_g_convolution(kU, 6, 2, g); };
  EXPECT_NEAR(integrate(p, 0, 1) + integrate(p, 1, 2), 1.0, 1e-6);
  const auto gp = [&](double g) { return g * p(g); };
  EXPECT_NEAR(integrate(gp, 0, 1) + integrate(gp, 1, 2), 2.0 * 4.0 / 6.0, 1e-6);
  EXPECT_EQ(p(0.0), 0.0);
  EXPECT_EQ(p(2.0), 0.0);
}

TEST(Convolution, PairSumMatchesMonteCarloOfTOnePlusTTwo) {
  const auto mc = montecarlo::scalar_density(200000, 40, 0.0, 2.0, 17, 2, [](Rng& rng) {
    const auto f = sampling::sample_haar_columns(kU, 6, 2, rng);
    const auto t = sampling::projection_probs(f, 2, 2).t;
    return t[0] + t[1];
  });
  EXPECT_GT(histogram_p_value(mc, [](double s) { return pair_sum_density(kU, 6, 2, s); }),
            0.001);
  const auto p = [](double s) { return pair_sum_density(kU, 6, 2, s); };
  EXPECT_NEAR(integrate(p, 0, 1) + integrate(p, 1, 2), 1.0, 1e-6);
}

TEST(Convolution, SixTwoMatchesMonteCarloConductance) {
  const auto mc = p_g_monte_carlo(kU, 6, 2, 200000, 40, 99, 2);
  EXPECT_GT(histogram_p_value(as_density(mc),
                              [](double g) { return p_g_convolution(kU, 6, 2, g); }),
            0.001);
}

TEST(Convolution, TwoTransmittingChannels) {
  // N-K = 2 uses the (N, K) law directly: compare with Monte Carlo at (5, 3).
  const auto mc = p_g_monte_carlo(kU, 5, 3, 200000, 40, 5, 2);
  EXPECT_GT(histogram_p_value(as_density(mc),
                              [](double g) { return p_g_convolution(kU, 5, 3, g); }),
            0.001);
}

TEST(Convolution, Unsupported) {
  try {
    p_g_convolution(kU, 7, 3, 1.0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedDimension);
  }
  EXPECT_TRUE(convolution_supported(4, 2));
  EXPECT_TRUE(convolution_supported(9, 7));
  EXPECT_TRUE(convolution_supported(9, 2));
  EXPECT_FALSE(convolution_supported(9, 4));
}

TEST(MonteCarlo, UnitaryFourTwoMatchesClosedForm) {
  const auto mc = p_g_monte_carlo(kU, 4, 2, 1000000, 20, 2718, 2);
  EXPECT_EQ(mc.method, Method::kMonteCarlo);
  EXPECT_EQ(mc.draws, 1000000u);
  EXPECT_EQ(mc.seed, 2718u);
  EXPECT_TRUE(mc.physical);
  double sup = 0.0;
  for (std::size_t i = 0; i < mc.values.size(); ++i) {
    const double w = mc.bin_edges[i + 1] - mc.bin_edges[i];
    const double avg = integrate(p_g_closed_42, mc.bin_edges[i], mc.bin_edges[i + 1]) / w;
    sup = std::max(sup, std::abs(mc.values[i] - avg));
  }
  EXPECT_LE(sup, 0.02);
  EXPECT_NEAR(mc.mean, 1.0, 3 * mc.std_error);
  EXPECT_NEAR(trapezoid(mc.grid, mc.values), 1.0, 0.05);
}

TEST(MonteCarlo, TwoOneIsUniform) {
  const auto mc = p_g_monte_carlo(kU, 2, 1, 200000, 10, 8, 1);
  EXPECT_EQ(mc.grid.size(), 10u);
  EXPECT_EQ(mc.bin_edges.back(), 1.0);
  EXPECT_GT(histogram_p_value(as_density(mc), [](double) { return 1.0; }), 0.001);
}

TEST(MonteCarlo, OrthogonalFourTwoIsSymmetric) {
  const auto mc = p_g_monte_carlo(kO, 4, 2, 400000, 20, 77, 2);
  EXPECT_FALSE(mc.physical);
  EXPECT_EQ(mc.bin_edges.front(), 0.0);
  EXPECT_EQ(mc.bin_edges.back(), 2.0);
  const double width = 0.1;
  for (std::size_t i = 0; i < 10; ++i) {
    const double a = mc.values[i], b = mc.values[19 - i];
    EXPECT_NEAR(a, b, 4 * std::sqrt((a + b) / (400000 * width)) + 1e-12) << i;
  }
  EXPECT_NEAR(mc.mean, 1.0, 3 * mc.std_error);
}

TEST(MonteCarlo, MeanConductance) {
  const std::tuple<EnsembleKind, int, int> cases[] = {
      {kU, 5, 2}, {kU, 7, 3}, {kO, 6, 2}, {kO, 5, 4}};
  for (auto [e, n, k] : cases) {
    const auto mc = p_g_monte_carlo(e, n, k, 100000, 10, 123, 2);
    EXPECT_NEAR(mc.mean, static_cast<double>(k * (n - k)) / n, 3 * mc.std_error) << n << k;
    EXPECT_EQ(mc.bin_edges.back(), g_max(n, k));
  }
}

TEST(MonteCarlo, ReproducibleAcrossThreadCounts) {
  const auto a = p_g_monte_carlo(kU, 4, 2, 20000, 16, 5, 1);
  const auto b = p_g_monte_carlo(kU, 4, 2, 20000, 16, 5, 3);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.mean, b.mean);
}

TEST(Weighted, OccupationWeightedConductance) {
  const std::vector<double> w{0.7, 0.3};
  const auto mc = weighted_g_monte_carlo(kU, 4, 2, w, 100000, 20, 3, 2);
  EXPECT_NEAR(mc.mean, 0.5, 3 * mc.std_error);
  EXPECT_EQ(mc.bin_edges.back(), 1.0);
  try {
    weighted_g_monte_carlo(kU, 4, 2, std::vector<double>{1.0}, 10, 4, 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidWeights);
  }
}

TEST(Trapezoid, Basics) {
  const std::vector<double> x{0, 1, 2};
  const std::vector<double> y{0, 2, 0};
  EXPECT_DOUBLE_EQ(trapezoid(x, y), 2.0);
}

}  // namespace
}  // namespace projstat::conductance
