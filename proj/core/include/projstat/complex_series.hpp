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
#include <vector>

namespace projstat::analytic {

/// Taylor expansion sum_j c_j (z - center)^j truncated after `order` terms.
///
/// Arithmetic keeps the truncation explicit: combining two series of order L
/// yields a series of order L. Series of different centers or orders do not
/// combine.
class ComplexSeries {
 public:
  using value_type = std::complex<double>;

  ComplexSeries(value_type center, int order);

  static ComplexSeries constant(value_type center, int order, value_type c);
  /// The identity function z itself: c_0 = center, c_1 = 1.
  static ComplexSeries variable(value_type center, int order);
  /// Polynomial p(z) = sum_j poly[j] z^j, re-expanded about `center`.
  static ComplexSeries polynomial(value_type center, int order,
                                  const std::vector<value_type>& poly);

  value_type center() const noexcept { return center_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()); }
  /// Coefficient of (z - center)^j; zero beyond the truncation or for j < 0.
  value_type coefficient(int j) const noexcept;
  void set_coefficient(int j, value_type c);

  ComplexSeries& operator+=(const ComplexSeries& other);
  ComplexSeries& operator-=(const ComplexSeries& other);
  ComplexSeries& operator*=(const ComplexSeries& other);
  ComplexSeries& operator*=(value_type scale);

  friend ComplexSeries operator+(ComplexSeries a, const ComplexSeries& b) { return a += b; }
  friend ComplexSeries operator-(ComplexSeries a, const ComplexSeries& b) { return a -= b; }
  friend ComplexSeries operator*(ComplexSeries a, const ComplexSeries& b) { return a *= b; }
  friend ComplexSeries operator*(ComplexSeries a, value_type s) { return a *= s; }
  friend ComplexSeries operator*(value_type s, ComplexSeries a) { return a *= s; }

  /// 1/f by series inversion; requires c_0 != 0.
  ComplexSeries reciprocal() const;
  /// f^n for any integer n (negative powers invert first).
  ComplexSeries pow(int n) const;

  /// (f(z) - c_0) / (z - center), i.e. the series divided by its simple zero
  /// at the center. The last coefficient of the result is unknown at this
  /// truncation and is set to zero, so callers expand one order higher.
  ComplexSeries deflate() const;

 private:
  void check_compatible(const ComplexSeries& other) const;

  value_type center_;
  std::vector<value_type> coeffs_;
};

}  // namespace projstat::analytic
