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

#include <optional>
#include <string_view>

namespace projstat {

/// Haar ensemble: real orthogonal group O(N) or complex unitary group U(N).
enum class EnsembleKind { kOrthogonal, kUnitary };

std::string_view to_string(EnsembleKind kind);
std::optional<EnsembleKind> parse_ensemble(std::string_view text);

/// Ambient dimension N, subspace dimension K and number of vectors R.
///
/// Construction through make() enforces 1 <= K <= N-1 and 1 <= R <= N.
/// Stricter constraints needed by the analytic two-point evaluators are
/// checked at their entry points, not here.
struct ProjectionConfig {
  int n = 0;
  int k = 0;
  int r = 0;

  static ProjectionConfig make(int n, int k, int r);

  friend bool operator==(const ProjectionConfig&,
                         const ProjectionConfig&) = default;
};

}  // namespace projstat
