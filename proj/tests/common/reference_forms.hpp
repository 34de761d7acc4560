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

// Published closed forms of two-point densities, typed in independently of
// the library so tests can hold the residue engine against them.

#pragma once

#include <boost/math/special_functions/ellint_1.hpp>
#include <cmath>
#include <numbers>

namespace projstat::testing {

inline double u42(double t1, double t2) {
  return t1 + t2 < 1 ? 12 * t1 * t2 : 12 * (1 - t1) * (1 - t2);
}

inline double s31(double t1, double t2) {
  return t1 * t2 * (t1 * t2 + 9) + 3 * t1 * t1 * (1 - t2) + 3 * t2 * t2 * (1 - t1) -
         6 * (t1 + t2) + 3;
}

inline double u62_lower(double t1, double t2) { return 80 * t1 * t2 * s31(t1, t2); }
inline double u62_upper(double t1, double t2) {
  return 80 * std::pow(1 - t1, 3) * std::pow(1 - t2, 3);
}
inline double u62(double t1, double t2) {
  return t1 + t2 < 1 ? u62_lower(t1, t2) : u62_upper(t1, t2);
}

inline double s12_3(double t1, double t2) {
  const double a = t1, b = t2;
  const double a2 = a * a, a3 = a2 * a, b2 = b * b, b3 = b2 * b;
  return 16 * a3 * b3 - 56 * a2 * b3 + 70 * a * b3 - 35 * b3 - 56 * a3 * b2 +
         196 * a2 * b2 - 245 * a * b2 + 105 * b2 + 70 * a3 * b - 245 * a2 * b +
         280 * a * b - 105 * b - 35 * a3 + 105 * a2 - 105 * a + 35;
}

inline double p12_3(double t1, double t2) {
  const double c = 72.0 / (7.0 * std::numbers::pi);
  if (t1 + t2 < 1) return c * std::sqrt(t1 * t2) * s12_3(t1, t2);
  return c * 16 * std::pow(1 - t1, 3.5) * std::pow(1 - t2, 3.5);
}

/// K(2 sqrt(ab)/(a+b)) / (pi (a+b)) with Boost's elliptic integral.
inline double p42(double t1, double t2) {
  const double a = std::sqrt(t1 * t2);
  const double b = std::sqrt((1 - t1) * (1 - t2));
  return boost::math::ellint_1(2 * std::sqrt(a * b) / (a + b)) / (std::numbers::pi * (a + b));
}

}  // namespace projstat::testing
