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

#include "projstat/complex_series.hpp"

#include <gtest/gtest.h>

#include <complex>

#include "projstat/error.hpp"

namespace projstat::analytic {
namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0, 1};

void expect_close(cplx a, cplx b, double tol = 1e-13) {
  EXPECT_NEAR(a.real(), b.real(), tol);
  EXPECT_NEAR(a.imag(), b.imag(), tol);
}

TEST(ComplexSeries, ProductIsTruncated) {
  // (1 + h)^2 = 1 + 2h + h^2, cut after two terms.
  ComplexSeries f = ComplexSeries::constant(0.0, 2, 1.0);
  f.set_coefficient(1, 1.0);
  const auto sq = f * f;
  EXPECT_EQ(sq.order(), 2);
  expect_close(sq.coefficient(0), 1.0);
  expect_close(sq.coefficient(1), 2.0);
  expect_close(sq.coefficient(2), 0.0);
}

TEST(ComplexSeries, PolynomialReexpansion) {
  // z^3 about z = 2: 8 + 12 h + 6 h^2 + h^3.
  const auto p = ComplexSeries::polynomial(2.0, 4, {0, 0, 0, 1});
  expect_close(p.coefficient(0), 8.0);
  expect_close(p.coefficient(1), 12.0);
  expect_close(p.coefficient(2), 6.0);
  expect_close(p.coefficient(3), 1.0);
}

TEST(ComplexSeries, ReciprocalAndNegativePowers) {
  // 1/(1 - h) = sum h^j.
  ComplexSeries f = ComplexSeries::constant(0.0, 6, 1.0);
  f.set_coefficient(1, -1.0);
  const auto inv = f.reciprocal();
  for (int j = 0; j < 6; ++j) expect_close(inv.coefficient(j), 1.0);
  // (1 - h)^{-2} = sum (j+1) h^j.
  const auto inv2 = f.pow(-2);
  for (int j = 0; j < 6; ++j) expect_close(inv2.coefficient(j), j + 1.0);
  expect_close((f.pow(3) * f.pow(-3)).coefficient(0), 1.0);
  expect_close((f.pow(3) * f.pow(-3)).coefficient(4), 0.0);
}

TEST(ComplexSeries, ResidueOfDoublePole) {
  // Res[(z^2+1)^{-2}, i] is the linear coefficient of (z+i)^{-2} about i.
  const auto z_plus_i = ComplexSeries::variable(kI, 2) + ComplexSeries::constant(kI, 2, kI);
  expect_close(z_plus_i.pow(-2).coefficient(1), -kI / 4.0);
}

TEST(ComplexSeries, Deflate) {
  const auto p = ComplexSeries::polynomial(1.0, 3, {-1, 1});  // z - 1 about 1 = h
  const auto q = p.deflate();
  expect_close(q.coefficient(0), 1.0);
  expect_close(q.coefficient(1), 0.0);
}

TEST(ComplexSeries, Errors) {
  EXPECT_THROW(ComplexSeries(0.0, 0), Error);
  const auto a = ComplexSeries::constant(0.0, 3, 1.0);
  const auto b = ComplexSeries::constant(1.0, 3, 1.0);
  const auto c = ComplexSeries::constant(0.0, 4, 1.0);
  EXPECT_THROW(a + b, Error);
  EXPECT_THROW(a * c, Error);
  try {
    ComplexSeries(0.0, 3).reciprocal();
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularity);
  }
  EXPECT_EQ(a.coefficient(-1), cplx{});
  EXPECT_EQ(a.coefficient(7), cplx{});
}

}  // namespace
}  // namespace projstat::analytic
