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

#include "projstat/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>

#include "projstat/error.hpp"

namespace projstat::quadrature {
namespace {

// Kronrod abscissae (positive half, descending) and weights; every odd index
// is shared with the embedded 7-point Gauss rule.
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment rule15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWk[7];
  double gauss = fc * kWg[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXk[static_cast<std::size_t>(i)];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWk[static_cast<std::size_t>(i)] * sum;
    if (i % 2 == 1) gauss += kWg[static_cast<std::size_t>(i / 2)] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

Result gauss_kronrod(const Integrand& f, double a, double b,
                     std::span<const double> breakpoints,
                     const Options& options) {
  if (!(b > a)) {
    if (a == b) return {0.0, 0.0, 0, true};
    throw Error(ErrorCode::kDomain, "integration range must satisfy a <= b");
  }
  std::vector<double> cuts{a};
  for (double p : breakpoints) {
    if (p > a && p < b) cuts.push_back(p);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Segment> heap;
  double value = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Segment s = rule15(f, cuts[i], cuts[i + 1]);
    value += s.value;
    error += s.error;
    heap.push(s);
  }

  int intervals = static_cast<int>(heap.size());
  auto tolerance = [&] {
    return std::max(options.abs_tol, options.rel_tol * std::abs(value));
  };
  while (error > tolerance() && intervals < options.max_intervals) {
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // interval exhausted
    heap.pop();
    const Segment left = rule15(f, worst.a, mid);
    const Segment right = rule15(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }
  // Re-sum to shed accumulated cancellation from the incremental updates.
  value = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kNumericalFailure, "integrand produced a non-finite value");
  }
  return {value, error, intervals,
          error <= std::max(options.abs_tol, options.rel_tol * std::abs(value))};
}

Result gauss_kronrod(const Integrand& f, double a, double b,
                     const Options& options) {
  return gauss_kronrod(f, a, b, std::span<const double>{}, options);
}

Result half_line(const Integrand& f, const Options& options) {
  constexpr double kHalfPi = 0.5 * std::numbers::pi;
  auto mapped = [&f](double w) {
    const double phi = kHalfPi * w * w;
    const double sin_phi = std::sin(phi);
    const double s = std::cos(phi) / sin_phi;
    // ds = csc^2(phi) dphi, dphi = pi w dw
    return f(s) * std::numbers::pi * w / (sin_phi * sin_phi);
  };
  return gauss_kronrod(mapped, 0.0, 1.0, options);
}

Rule gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorCode::kDomain, "Gauss-Legendre order must be >= 1");
  Rule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

}  // namespace projstat::quadrature
