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

#include "projstat/special_fns.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "projstat/error.hpp"

namespace projstat::special {
namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_half_integer(double x) {
  const double twice = 2.0 * x;
  return twice == std::round(twice);
}

void check_imk_orders(double m, double k) {
  if (!(m > 0.0) || !(k > 0.0) || !is_half_integer(m) || !is_half_integer(k)) {
    throw Error(ErrorCode::kDomain,
                "I_mk requires positive integer or half-integer m, k");
  }
  if (m + k < 2.0) {
    throw Error(ErrorCode::kDomain, "I_mk requires m + k >= 2");
  }
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw Error(ErrorCode::kDomain,
                "log_gamma requires x > 0 (got " + std::to_string(x) + ")");
  }
  if (x < 0.5) {
    // Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    series += kLanczos[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t +
         std::log(series);
}

double GammaRatio::log_value() const {
  double acc = 0.0;
  for (double x : numerator) acc += log_gamma(x);
  for (double x : denominator) acc -= log_gamma(x);
  return acc;
}

double GammaRatio::value() const { return std::exp(log_value()); }

double beta_density(double m, double k, double t) {
  if (!(m > 0.0) || !(k > 0.0)) {
    throw Error(ErrorCode::kDomain, "beta_density requires m, k > 0");
  }
  if (!(t > 0.0 && t < 1.0)) {
    throw Error(ErrorCode::kDomain,
                "beta_density requires 0 < t < 1 (got " + std::to_string(t) + ")");
  }
  const double log_norm = GammaRatio{{m + k}, {m, k}}.log_value();
  return std::exp(log_norm + (k - 1.0) * std::log(t) +
                  (m - 1.0) * std::log1p(-t));
}

double i_mk(double m, double k, double a, double b) {
  check_imk_orders(m, k);
  if (!(a > 0.0 && a < 1.0) || !(b > 0.0 && b < 1.0)) {
    throw Error(ErrorCode::kDomain, "I_mk requires 0 < a, b < 1");
  }
  const double log_norm = GammaRatio{{m + k}, {m, k}}.log_value();
  return std::exp(log_norm + (k - 1.0) * std::log(a) + (m - 1.0) * std::log(b) -
                  (m + k - 1.0) * std::log(a + b));
}

std::complex<double> i_mk_generalized(double m, double k,
                                      std::complex<double> alpha, double a,
                                      std::complex<double> beta, double b) {
  if (alpha.real() < 1.0 || beta.real() < 1.0) {
    throw Error(ErrorCode::kDomain,
                "generalized I_mk requires Re(alpha), Re(beta) >= 1");
  }
  const std::complex<double> denom = beta * a + alpha * b;
  if (denom == 0.0) {
    throw Error(ErrorCode::kSingularity, "beta a + alpha b vanishes");
  }
  const double base = i_mk(m, k, a, b);
  const double exponent = m + k - 1.0;
  const std::complex<double> ratio = (a + b) / denom;
  if (exponent == std::round(exponent)) {
    return base * std::pow(ratio, static_cast<int>(exponent));
  }
  return base * std::pow(ratio, exponent);
}

double agm(double x, double y) {
  if (!(x >= 0.0) || !(y >= 0.0)) {
    throw Error(ErrorCode::kDomain, "agm requires nonnegative arguments");
  }
  for (int iter = 0; iter < 64; ++iter) {
    const double mean = 0.5 * (x + y);
    const double geo = std::sqrt(x * y);
    if (std::abs(mean - geo) <= 1e-16 * mean) return mean;
    x = mean;
    y = geo;
  }
  return 0.5 * (x + y);
}

double elliptic_k_from_complement(double complementary_modulus) {
  if (!(complementary_modulus > 0.0)) {
    throw Error(ErrorCode::kDomain,
                "complete elliptic integral diverges for complementary "
                "modulus 0 (k = 1)");
  }
  if (complementary_modulus > 1.0) {
    throw Error(ErrorCode::kDomain, "complementary modulus must not exceed 1");
  }
  return kPi / (2.0 * agm(1.0, complementary_modulus));
}

double elliptic_k(double modulus) {
  if (!(modulus >= 0.0) || !(modulus < 1.0)) {
    throw Error(ErrorCode::kDomain,
                "elliptic_k requires 0 <= k < 1 (got " + std::to_string(modulus) +
                    ")");
  }
  return elliptic_k_from_complement(std::sqrt((1.0 - modulus) * (1.0 + modulus)));
}

double lorentzian_1d(double c, double m) {
  if (!(c > 0.0)) throw Error(ErrorCode::kDomain, "lorentzian_1d requires c > 0");
  if (!(m >= 1.0)) throw Error(ErrorCode::kDomain, "lorentzian_1d requires m >= 1");
  const double log_ratio = GammaRatio{{m - 0.5}, {m}}.log_value();
  return std::exp(log_ratio) / (2.0 * std::sqrt(kPi * c));
}

double lorentzian_2d(double c, double m) {
  if (!(c > 0.0)) throw Error(ErrorCode::kDomain, "lorentzian_2d requires c > 0");
  if (!(m > 1.0)) {
    throw Error(ErrorCode::kSingularity,
                "two-dimensional Lorentzian integral diverges for m <= 1");
  }
  return 1.0 / (4.0 * kPi * c * (m - 1.0));
}

}  // namespace projstat::special
