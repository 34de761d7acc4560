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

#include <cmath>

#include "projstat/error.hpp"

namespace projstat::analytic {

ComplexSeries::ComplexSeries(value_type center, int order) : center_(center) {
  if (order < 1) {
    throw Error(ErrorCode::kDomain, "series order must be at least 1");
  }
  coeffs_.assign(static_cast<std::size_t>(order), value_type{});
}

ComplexSeries ComplexSeries::constant(value_type center, int order, value_type c) {
  ComplexSeries s(center, order);
  s.coeffs_[0] = c;
  return s;
}

ComplexSeries ComplexSeries::variable(value_type center, int order) {
  ComplexSeries s(center, order);
  s.coeffs_[0] = center;
  if (order > 1) s.coeffs_[1] = 1.0;
  return s;
}

ComplexSeries ComplexSeries::polynomial(value_type center, int order,
                                        const std::vector<value_type>& poly) {
  // Horner in series arithmetic: p = (...(p_n z + p_{n-1}) z + ...) + p_0.
  ComplexSeries z = variable(center, order);
  ComplexSeries acc(center, order);
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    acc *= z;
    acc.coeffs_[0] += *it;
  }
  return acc;
}

ComplexSeries::value_type ComplexSeries::coefficient(int j) const noexcept {
  if (j < 0 || j >= order()) return {};
  return coeffs_[static_cast<std::size_t>(j)];
}

void ComplexSeries::set_coefficient(int j, value_type c) {
  if (j < 0 || j >= order()) {
    throw Error(ErrorCode::kDomain, "series coefficient index out of range");
  }
  coeffs_[static_cast<std::size_t>(j)] = c;
}

void ComplexSeries::check_compatible(const ComplexSeries& other) const {
  if (other.center_ != center_ || other.order() != order()) {
    throw Error(ErrorCode::kDomain,
                "series with different centers or orders cannot be combined");
  }
}

ComplexSeries& ComplexSeries::operator+=(const ComplexSeries& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

ComplexSeries& ComplexSeries::operator-=(const ComplexSeries& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

ComplexSeries& ComplexSeries::operator*=(const ComplexSeries& other) {
  check_compatible(other);
  const std::size_t n = coeffs_.size();
  std::vector<value_type> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == value_type{}) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  return *this;
}

ComplexSeries& ComplexSeries::operator*=(value_type scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

ComplexSeries ComplexSeries::reciprocal() const {
  const value_type c0 = coeffs_[0];
  if (c0 == value_type{} || !std::isfinite(std::abs(c0))) {
    throw Error(ErrorCode::kSingularity,
                "series with vanishing constant term has no reciprocal");
  }
  ComplexSeries inv(center_, order());
  inv.coeffs_[0] = 1.0 / c0;
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    value_type acc{};
    for (std::size_t j = 1; j <= n; ++j) acc += coeffs_[j] * inv.coeffs_[n - j];
    inv.coeffs_[n] = -acc / c0;
  }
  return inv;
}

ComplexSeries ComplexSeries::pow(int n) const {
  if (n < 0) return reciprocal().pow(-n);
  ComplexSeries result = constant(center_, order(), 1.0);
  ComplexSeries base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

ComplexSeries ComplexSeries::deflate() const {
  ComplexSeries out(center_, order());
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.coeffs_[i - 1] = coeffs_[i];
  return out;
}

}  // namespace projstat::analytic
