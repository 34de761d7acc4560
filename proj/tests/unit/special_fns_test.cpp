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

#include <gtest/gtest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <complex>
#include <numbers>

#include "projstat/error.hpp"

namespace projstat::special {
namespace {

constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;

// Int_R g(s) ds through s = tan(theta) and tanh-sinh on (-pi/2, pi/2).
template <typename F>
double real_line(F g) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate(
      [&](double th) {
        const double c = std::cos(th);
        if (c == 0.0) return 0.0;
        return g(std::tan(th)) / (c * c);
      },
      -kPi / 2, kPi / 2);
}

double i_mk_oracle(double m, double k, double a, double b) {
  const double re = real_line([&](double s) {
    return (std::pow(cplx(1.0, a * s), -m) * std::pow(cplx(1.0, -b * s), -k)).real();
  });
  return (m + k - 1.0) * re / (2.0 * kPi);
}

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kNumericalFailure;
}

TEST(LogGamma, SmallArguments) {
  EXPECT_NEAR(log_gamma(1.0), 0.0, 1e-15);
  EXPECT_NEAR(log_gamma(0.5), 0.5723649429247001, 1e-15);
  EXPECT_NEAR(log_gamma(6.0), std::log(120.0), 1e-14);
}

TEST(LogGamma, RelativeAccuracyAgainstBoost) {
  for (double x = 0.5; x <= 50.0; x += 0.125) {
    const long double exact = boost::math::tgamma(static_cast<long double>(x));
    const long double ours = std::exp(static_cast<long double>(log_gamma(x)));
    EXPECT_LE(std::abs(static_cast<double>((ours - exact) / exact)), 1e-13) << "x=" << x;
  }
}

TEST(LogGamma, RejectsNonPositive) {
  EXPECT_EQ(code_of([] { log_gamma(0.0); }), ErrorCode::kDomain);
  EXPECT_EQ(code_of([] { log_gamma(-2.5); }), ErrorCode::kDomain);
}

TEST(GammaRatio, LargeArgumentsStayFinite) {
  const GammaRatio r{{300.5}, {300.0}};
  EXPECT_NEAR(r.log_value(), boost::math::lgamma(300.5) - boost::math::lgamma(300.0), 1e-11);
  EXPECT_TRUE(std::isfinite(r.value()));
  EXPECT_NEAR((GammaRatio{{6.0}, {4.0, 2.0}}.value()), 20.0, 1e-12);
}

TEST(BetaDensity, MatchesGammaFormula) {
  EXPECT_NEAR(beta_density(2.0, 2.0, 0.5), 1.5, 1e-14);
  EXPECT_NEAR(beta_density(1.0, 1.0, 0.3), 1.0, 1e-14);
  EXPECT_NEAR(beta_density(1.5, 1.5, 0.25),
              std::tgamma(3.0) / (std::tgamma(1.5) * std::tgamma(1.5)) *
                  std::sqrt(0.25 * 0.75),
              1e-13);
}

TEST(IMk, ExampleValues) {
  EXPECT_NEAR(i_mk(1, 1, 0.5, 0.5), 1.0, 1e-14);
  EXPECT_NEAR(i_mk(2, 2, 0.5, 0.5), 1.5, 1e-14);
  EXPECT_NEAR(i_mk(2, 2, 0.3, 0.7), 6 * 0.3 * 0.7, 1e-14);
  EXPECT_NEAR(i_mk(1, 1, 0.25, 0.5), 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(i_mk_oracle(1, 1, 0.25, 0.5), 4.0 / 3.0, 1e-10);
}

TEST(IMk, MatchesDefiningIntegral) {
  const double orders[] = {0.5, 1.0, 1.5, 2.0, 3.0, 4.5};
  const double points[] = {0.2, 0.5, 0.9};
  for (double m : orders) {
    for (double k : orders) {
      if (m + k < 2.0) continue;
      for (double a : points) {
        for (double b : points) {
          const double v = i_mk(m, k, a, b);
          EXPECT_NEAR(v, i_mk_oracle(m, k, a, b), 1e-10 * std::max(1.0, v))
              << "m=" << m << " k=" << k << " a=" << a << " b=" << b;
        }
      }
    }
  }
}

TEST(IMk, IsABetaDensityAlongTheDiagonal) {
  boost::math::quadrature::tanh_sinh<double> ts;
  const double below_one = std::nextafter(1.0, 0.0);
  const std::pair<double, double> cases[] = {{1, 1}, {2, 2}, {0.5, 1.5}, {1.5, 2.5}, {4, 3}};
  for (auto [m, k] : cases) {
    // Integrate each half with its endpoint at 0, where abscissas resolve.
    const double left = ts.integrate(
        [&](double t) { return t > 0 ? i_mk(m, k, t, std::min(1 - t, below_one)) : 0.0; }, 0.0,
        0.5);
    const double right = ts.integrate(
        [&](double u) { return u > 0 ? i_mk(m, k, std::min(1 - u, below_one), u) : 0.0; }, 0.0,
        0.5);
    EXPECT_NEAR(left + right, 1.0, 1e-10) << m << "," << k;
  }
}

TEST(IMk, Symmetry) {
  EXPECT_NEAR(i_mk(2.5, 1.5, 0.3, 0.6), i_mk(1.5, 2.5, 0.6, 0.3), 1e-14);
  EXPECT_NEAR(i_mk(3, 1, 0.1, 0.8), i_mk(1, 3, 0.8, 0.1), 1e-14);
}

TEST(IMk, RejectsBadParameters) {
  EXPECT_EQ(code_of([] { i_mk(0.3, 2, 0.5, 0.5); }), ErrorCode::kDomain);
  EXPECT_EQ(code_of([] { i_mk(0.5, 1, 0.5, 0.5); }), ErrorCode::kDomain);
  EXPECT_EQ(code_of([] { i_mk(1, 1, 1.0, 0.5); }), ErrorCode::kDomain);
  EXPECT_EQ(code_of([] { i_mk(1, 1, 0.5, 0.0); }), ErrorCode::kDomain);
}

TEST(IMkGeneralized, ReducesToIMk) {
  const cplx v = i_mk_generalized(2, 1.5, 1.0, 0.3, 1.0, 0.4);
  EXPECT_NEAR(v.real(), i_mk(2, 1.5, 0.3, 0.4), 1e-14);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
  const cplx w = i_mk_generalized(1, 1, 2.0, 0.5, 2.0, 0.5);
  EXPECT_NEAR(w.real(), 0.5, 1e-14);
}

TEST(IMkGeneralized, MatchesDefiningIntegral) {
  struct Case {
    double m, k;
    cplx alpha;
    double a;
    cplx beta;
    double b;
  };
  const Case cases[] = {
      {2, 1, {1, 1}, 0.3, {1, 0}, 0.6},
      {1.5, 1.5, {1, -0.7}, 0.5, {2, 0.4}, 0.2},
      {3, 0.5, {1.2, 2.0}, 0.9, {1, -1.5}, 0.4},
      {2.5, 2, {1, 0.25}, 0.1, {1.5, 0}, 0.7},
  };
  for (const auto& c : cases) {
    const auto integrand = [&](double s) {
      return std::pow(c.alpha + cplx(0, c.a * s), -c.m) *
             std::pow(c.beta - cplx(0, c.b * s), -c.k);
    };
    const double scale = (c.m + c.k - 1.0) / (2.0 * kPi);
    const double re = scale * real_line([&](double s) { return integrand(s).real(); });
    const double im = scale * real_line([&](double s) { return integrand(s).imag(); });
    const cplx v = i_mk_generalized(c.m, c.k, c.alpha, c.a, c.beta, c.b);
    EXPECT_NEAR(v.real(), re, 1e-10);
    EXPECT_NEAR(v.imag(), im, 1e-10);
  }
}

TEST(IMkGeneralized, RequiresRealPartsAtLeastOne) {
  EXPECT_EQ(code_of([] { i_mk_generalized(1, 1, cplx(0.5, 0), 0.5, 1.0, 0.5); }),
            ErrorCode::kDomain);
  EXPECT_EQ(code_of([] { i_mk_generalized(1, 1, 1.0, 0.5, cplx(0.9, 3), 0.5); }),
            ErrorCode::kDomain);
}

TEST(EllipticK, ZeroModulus) { EXPECT_NEAR(elliptic_k(0.0), kPi / 2, 1e-16); }

TEST(EllipticK, MatchesDefiningIntegral) {
  boost::math::quadrature::tanh_sinh<double> ts;
  std::vector<double> moduli;
  for (int i = 0; i <= 9; ++i) moduli.push_back(0.1 * i);
  moduli.push_back(0.99);
  for (double k : moduli) {
    const double quad = ts.integrate(
        [&](double phi) {
          const double s = std::sin(phi);
          return 1.0 / std::sqrt(1.0 - k * k * s * s);
        },
        0.0, kPi / 2);
    EXPECT_NEAR(elliptic_k(k), quad, 1e-12 * quad) << "k=" << k;
    EXPECT_NEAR(elliptic_k(k), boost::math::ellint_1(k), 1e-14 * quad) << "k=" << k;
  }
}

TEST(EllipticK, ComplementFormAgreesAndStaysAccurateNearOne) {
  for (double k : {0.1, 0.5, 0.9}) {
    EXPECT_NEAR(elliptic_k_from_complement(std::sqrt(1 - k * k)), elliptic_k(k), 1e-14);
  }
  // K ~ log(4/k') as k' -> 0.
  const double kp = 1e-12;
  EXPECT_NEAR(elliptic_k_from_complement(kp), std::log(4.0 / kp), 1e-10);
  EXPECT_EQ(code_of([] { elliptic_k(1.0); }), ErrorCode::kDomain);
  EXPECT_EQ(code_of([] { elliptic_k_from_complement(0.0); }), ErrorCode::kDomain);
}

TEST(Lorentzian, ExampleValues) {
  EXPECT_NEAR(lorentzian_2d(1.0, 2.0), 1.0 / (4 * kPi), 1e-15);
  EXPECT_NEAR(lorentzian_2d(0.25, 4.0), 1.0 / (3 * kPi), 1e-15);
  EXPECT_NEAR(lorentzian_2d(2.0, 3.0), 1.0 / (16 * kPi), 1e-15);
  EXPECT_NEAR(lorentzian_1d(1.0, 2.0), 0.25, 1e-15);
  EXPECT_NEAR(lorentzian_1d(1.0, 1.0), 0.5, 1e-15);
}

TEST(Lorentzian, MatchesQuadrature) {
  boost::math::quadrature::exp_sinh<double> es;
  for (double c : {0.25, 1.0, 4.0}) {
    for (double m : {1.5, 2.0, 3.0, 6.0}) {
      const double one = real_line([&](double tau) { return std::pow(1 + c * tau * tau, -m); }) /
                         (2 * kPi);
      EXPECT_NEAR(lorentzian_1d(c, m), one, 1e-10) << c << "," << m;
      const double two =
          es.integrate([&](double r) { return r * std::pow(1 + c * r * r, -m); }) / (2 * kPi);
      EXPECT_NEAR(lorentzian_2d(c, m), two, 1e-10) << c << "," << m;
    }
  }
}

TEST(Lorentzian, RejectsDivergentExponents) {
  EXPECT_EQ(code_of([] { lorentzian_1d(1.0, 0.5); }), ErrorCode::kDomain);
  EXPECT_EQ(code_of([] { lorentzian_1d(0.0, 2.0); }), ErrorCode::kDomain);
  EXPECT_EQ(code_of([] { lorentzian_2d(1.0, 1.0); }), ErrorCode::kSingularity);
}

}  // namespace
}  // namespace projstat::special
