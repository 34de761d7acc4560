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

#include "projstat/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "projstat/complex_series.hpp"
#include "projstat/error.hpp"
#include "projstat/parallel.hpp"
#include "projstat/quadrature.hpp"
#include "projstat/special_fns.hpp"

namespace projstat::analytic {
namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

void check_open_unit(double t, const char* name) {
  if (!(t > 0.0 && t < 1.0)) {
    throw Error(ErrorCode::kDomain, std::string(name) +
                                        " must lie strictly inside (0, 1) (got " +
                                        std::to_string(t) + ")");
  }
}

void check_twopoint_dims(EnsembleKind ensemble, int n, int k) {
  ProjectionConfig::make(n, k, 2);
  if (ensemble == EnsembleKind::kOrthogonal && n < 4) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "orthogonal two-point density requires N >= 4 (N >= R+2) so that "
                "the s-integral converges (got N=" + std::to_string(n) + ")");
  }
  if (ensemble == EnsembleKind::kUnitary && n < 3) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "unitary two-point density requires N >= 3 (N >= R+1) (got N=" +
                    std::to_string(n) + ")");
  }
}

// t1 + t2 - 1 without the cancellation of forming the sum first.
double line_offset(double t1, double t2) { return t1 - (1.0 - t2); }

// Beta-law exponents (m, k) of the one-point density.
std::pair<double, double> onepoint_orders(EnsembleKind ensemble, int n, int k) {
  if (ensemble == EnsembleKind::kOrthogonal) return {0.5 * (n - k), 0.5 * k};
  return {static_cast<double>(n - k), static_cast<double>(k)};
}

double onepoint_value(EnsembleKind ensemble, int n, int k, double t) {
  const auto [m, kk] = onepoint_orders(ensemble, n, k);
  return special::beta_density(m, kk, t);
}

double int_pow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

// Residue integral of the unitary s-integrand, including the (m+k) factor
// and the +-2 pi i / 2 pi orientation.
cplx unitary_residue_integral(int m, int k, double t1, double t2, double ts) {
  if (ts <= 0.0) {
    // Close upward: only alpha's zero at i/t1 (order m) is enclosed.
    if (m == 0) return {};
    const cplx pole = kI / t1;
    const int order = m;
    // beta(pole + h) = 1/t1 - i (1-t1) h ; gamma(pole + h) = (1-t2)/t1 + i ts h
    ComplexSeries beta(pole, order);
    beta.set_coefficient(0, 1.0 / t1);
    if (order > 1) beta.set_coefficient(1, -kI * (1.0 - t1));
    ComplexSeries gamma(pole, order);
    gamma.set_coefficient(0, (1.0 - t2) / t1);
    if (order > 1) gamma.set_coefficient(1, kI * ts);
    const ComplexSeries regular = beta.pow(-k) * gamma.reciprocal();
    const cplx residue = std::pow(kI * t1, -m) * regular.coefficient(order - 1);
    return kI * static_cast<double>(m + k) * residue;
  }
  // Close downward: only beta's zero at -i/(1-t1) (order k) is enclosed.
  if (k == 0) return {};
  const cplx pole = -kI / (1.0 - t1);
  const int order = k;
  ComplexSeries alpha(pole, order);
  alpha.set_coefficient(0, 1.0 / (1.0 - t1));
  if (order > 1) alpha.set_coefficient(1, kI * t1);
  ComplexSeries gamma(pole, order);
  gamma.set_coefficient(0, t2 / (1.0 - t1));
  if (order > 1) gamma.set_coefficient(1, kI * ts);
  const ComplexSeries regular = alpha.pow(-m) * gamma.reciprocal();
  const cplx residue = std::pow(-kI * (1.0 - t1), -k) * regular.coefficient(order - 1);
  return -kI * static_cast<double>(m + k) * residue;
}

// J_mk of the orthogonal case after z = sqrt(1 + i s ts); poles at
// a = sqrt((1-t2)/t1) and b = sqrt(t2/(1-t1)) of orders m and k.
double orthogonal_residue_integral(int m, int k, double t1, double t2, double ts) {
  const double a = std::sqrt((1.0 - t2) / t1);
  const double b = std::sqrt(t2 / (1.0 - t1));
  // b^2 - a^2 = ts / (t1 (1 - t1)), exact in ts.
  const double gap = ts / (t1 * (1.0 - t1));
  const double scale = (m + k - 0.5) * 2.0 * int_pow(ts, m + k - 1) /
                       (int_pow(t1, m) * int_pow(1.0 - t1, k));
  if (ts > 0.0) {
    // Negatively oriented loop around b.
    if (k == 0) return 0.0;
    const int order = k;
    ComplexSeries z_plus_b(b, order);
    z_plus_b.set_coefficient(0, 2.0 * b);
    if (order > 1) z_plus_b.set_coefficient(1, 1.0);
    // z^2 - a^2 about b: gap + 2 b h + h^2
    ComplexSeries quad(b, order);
    quad.set_coefficient(0, gap);
    if (order > 1) quad.set_coefficient(1, 2.0 * b);
    if (order > 2) quad.set_coefficient(2, 1.0);
    const ComplexSeries regular = z_plus_b.pow(-k) * quad.pow(-m);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;  // (b^2 - z^2)^{-k} = (-1)^k ...
    const double residue = sign * regular.coefficient(order - 1).real();
    return -scale * residue;
  }
  // Positively oriented loop around a.
  if (m == 0) return 0.0;
  const int order = m;
  ComplexSeries z_plus_a(a, order);
  z_plus_a.set_coefficient(0, 2.0 * a);
  if (order > 1) z_plus_a.set_coefficient(1, 1.0);
  // b^2 - z^2 about a: gap - 2 a h - h^2
  ComplexSeries quad(a, order);
  quad.set_coefficient(0, gap);
  if (order > 1) quad.set_coefficient(1, -2.0 * a);
  if (order > 2) quad.set_coefficient(2, -1.0);
  const ComplexSeries regular = z_plus_a.pow(-m) * quad.pow(-k);
  return scale * regular.coefficient(order - 1).real();
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kClosedForm: return "closed_form";
    case Method::kQuadrature: return "quadrature";
    case Method::kResidue: return "residue";
  }
  return "unknown";
}

TwoPointIntegrand TwoPointIntegrand::make(EnsembleKind ensemble, int n, int k,
                                          double t1, double t2) {
  check_twopoint_dims(ensemble, n, k);
  check_open_unit(t1, "t1");
  check_open_unit(t2, "t2");
  TwoPointIntegrand f{ensemble, n, k, t1, t2, 0.0, 0.0, line_offset(t1, t2)};
  if (ensemble == EnsembleKind::kOrthogonal) {
    f.m_exponent = 0.5 * (n - k - 1);
    f.k_exponent = 0.5 * (k - 1);
  } else {
    f.m_exponent = n - k - 1;
    f.k_exponent = k - 1;
  }
  return f;
}

std::complex<double> TwoPointIntegrand::operator()(double s) const {
  const cplx alpha{1.0, s * t1};
  const cplx beta{1.0, -s * (1.0 - t1)};
  const cplx gamma{1.0, s * ts};
  const double c = ensemble == EnsembleKind::kOrthogonal ? 0.5 : 1.0;
  return std::exp(-m_exponent * std::log(alpha) - k_exponent * std::log(beta) -
                  c * std::log(gamma));
}

double TwoPointIntegrand::prefactor() const {
  if (ensemble == EnsembleKind::kOrthogonal) return (n - 3) / (4.0 * kPi);
  return (n - 2) / (2.0 * kPi);
}

DensityValue onepoint_density(EnsembleKind ensemble, int n, int k, double t) {
  ProjectionConfig::make(n, k, 1);
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(ErrorCode::kDomain,
                "t must lie in [0, 1] (got " + std::to_string(t) + ")");
  }
  if (t > 0.0 && t < 1.0) {
    return {onepoint_value(ensemble, n, k, t), Method::kClosedForm, 0.0};
  }
  const auto [m, kk] = onepoint_orders(ensemble, n, k);
  const double exponent = (t == 0.0) ? kk - 1.0 : m - 1.0;
  if (exponent < 0.0) {
    throw Error(ErrorCode::kSingularity,
                "one-point density diverges at t = " + std::to_string(t));
  }
  if (exponent > 0.0) return {0.0, Method::kClosedForm, 0.0};
  return {special::GammaRatio{{m + kk}, {m, kk}}.value(), Method::kClosedForm, 0.0};
}

DensityValue twopoint_quadrature(EnsembleKind ensemble, int n, int k, double t1,
                                 double t2, const Options& options) {
  const TwoPointIntegrand f = TwoPointIntegrand::make(ensemble, n, k, t1, t2);
  const bool orthogonal = ensemble == EnsembleKind::kOrthogonal;
  if (orthogonal && n == 4 && f.ts == 0.0) {
    throw Error(ErrorCode::kSingularity,
                "orthogonal N=4 density diverges on the line t1 + t2 = 1");
  }
  // f(-s) = conj(f(s)), so the full-line integral is twice the real half-line one.
  const double scale = 2.0 * f.prefactor() * onepoint_value(ensemble, n, k, t2);
  quadrature::Options qopts;
  qopts.abs_tol = options.abs_tol / scale;
  qopts.rel_tol = 1e-13;
  qopts.max_intervals = options.max_intervals;
  const auto result =
      quadrature::half_line([&f](double s) { return f(s).real(); }, qopts);
  DensityValue out{scale * result.value, Method::kQuadrature,
                   scale * result.abs_error, false};
  if (orthogonal && std::abs(f.ts) < options.eps_ts) {
    out.near_singular = true;
    out.est_error = std::max(out.est_error, options.eps_ts * std::abs(out.value));
  }
  return out;
}

DensityValue twopoint_residue(EnsembleKind ensemble, int n, int k, double t1,
                              double t2, const Options& options) {
  check_twopoint_dims(ensemble, n, k);
  check_open_unit(t1, "t1");
  check_open_unit(t2, "t2");
  const double ts = line_offset(t1, t2);
  const double onepoint = onepoint_value(ensemble, n, k, t2);
  if (ensemble == EnsembleKind::kUnitary) {
    const cplx integral = unitary_residue_integral(n - k - 1, k - 1, t1, t2, ts);
    return {onepoint * integral.real(), Method::kResidue,
            onepoint * std::abs(integral.imag())};
  }
  if (!residue_supported(ensemble, n, k)) {
    throw Error(ErrorCode::kUnsupportedParity,
                "orthogonal residue evaluation needs K odd and N even (got N=" +
                    std::to_string(n) + ", K=" + std::to_string(k) + ")");
  }
  if (std::abs(ts) < options.eps_ts) {
    throw Error(ErrorCode::kNearSingularity,
                "|t1 + t2 - 1| = " + std::to_string(std::abs(ts)) +
                    " is inside the eps_ts strip; the two poles merge");
  }
  const double integral =
      orthogonal_residue_integral((n - k - 1) / 2, (k - 1) / 2, t1, t2, ts);
  return {onepoint * integral, Method::kResidue, 0.0};
}

DensityValue closed_form_P42(double t1, double t2) {
  check_open_unit(t1, "t1");
  check_open_unit(t2, "t2");
  const double ts = line_offset(t1, t2);
  if (ts == 0.0) {
    throw Error(ErrorCode::kSingularity,
                "P42 diverges on the line t1 + t2 = 1 (elliptic modulus 1)");
  }
  const double a = std::sqrt(t1 * t2);
  const double b = std::sqrt((1.0 - t1) * (1.0 - t2));
  // Modulus 2 sqrt(ab)/(a+b); its complement |a-b|/(a+b) = |ts|/(a+b)^2
  // since a^2 - b^2 = ts.
  const double complement = std::min(1.0, std::abs(ts) / ((a + b) * (a + b)));
  // Below 1e-100 K = log(4/k') to double precision; stay in log space.
  const double k_value =
      complement < 1e-100
          ? std::log(4.0) - std::log(std::abs(ts)) + 2.0 * std::log(a + b)
          : special::elliptic_k_from_complement(complement);
  const double value = k_value / (kPi * (a + b));
  return {value, Method::kClosedForm, 0.0};
}

DensityValue closed_form_U42(double t1, double t2) {
  check_open_unit(t1, "t1");
  check_open_unit(t2, "t2");
  const double value =
      line_offset(t1, t2) < 0.0 ? 12.0 * t1 * t2 : 12.0 * (1.0 - t1) * (1.0 - t2);
  return {value, Method::kClosedForm, 0.0};
}

double z_zero(EnsembleKind ensemble, int n) {
  if (n < 3) {
    throw Error(ErrorCode::kDomain, "Z(0) requires N >= 3 (got " + std::to_string(n) + ")");
  }
  if (ensemble == EnsembleKind::kOrthogonal) {
    return special::GammaRatio{{0.5 * (n - 1)}, {0.5 * n}}.value() /
           std::sqrt(kPi);
  }
  return 1.0 / (kPi * (n - 1));
}

bool residue_supported(EnsembleKind ensemble, int n, int k) {
  if (ensemble == EnsembleKind::kUnitary) return true;
  return k % 2 == 1 && n % 2 == 0;
}

Method preferred_method(EnsembleKind ensemble, int n, int k) {
  if (n == 4 && k == 2) return Method::kClosedForm;
  if (residue_supported(ensemble, n, k)) return Method::kResidue;
  return Method::kQuadrature;
}

DensityValue density_auto(EnsembleKind ensemble, int n, int k, double t1,
                          double t2, const Options& options) {
  check_twopoint_dims(ensemble, n, k);
  switch (preferred_method(ensemble, n, k)) {
    case Method::kClosedForm:
      return ensemble == EnsembleKind::kOrthogonal ? closed_form_P42(t1, t2)
                                                   : closed_form_U42(t1, t2);
    case Method::kResidue:
      check_open_unit(t1, "t1");
      check_open_unit(t2, "t2");
      if (ensemble == EnsembleKind::kOrthogonal &&
          std::abs(line_offset(t1, t2)) < options.eps_ts) {
        return twopoint_quadrature(ensemble, n, k, t1, t2, options);
      }
      return twopoint_residue(ensemble, n, k, t1, t2, options);
    case Method::kQuadrature:
      break;
  }
  return twopoint_quadrature(ensemble, n, k, t1, t2, options);
}

std::vector<GridPoint> density_grid(EnsembleKind ensemble, int n, int k,
                                    std::span<const double> t1s,
                                    std::span<const double> t2s,
                                    const Options& options, int threads) {
  check_twopoint_dims(ensemble, n, k);
  std::vector<GridPoint> out(t1s.size() * t2s.size());
  parallel_for(out.size(), threads, [&](int, std::size_t idx) {
    const double t1 = t1s[idx / t2s.size()];
    const double t2 = t2s[idx % t2s.size()];
    GridPoint& p = out[idx];
    p.t1 = t1;
    p.t2 = t2;
    try {
      p.density = density_auto(ensemble, n, k, t1, t2, options);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSingularity) throw;
      p.singular = true;
      p.density = {std::numeric_limits<double>::infinity(),
                   preferred_method(ensemble, n, k), 0.0, true};
    }
  });
  return out;
}

}  // namespace projstat::analytic
