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

#include "projstat/types.hpp"

#include <string>

#include "projstat/error.hpp"

namespace projstat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidDimension: return "invalid-dimension";
    case ErrorCode::kInvalidWeights: return "invalid-weights";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kSingularity: return "singularity";
    case ErrorCode::kUnsupportedDimension: return "unsupported-dimension";
    case ErrorCode::kUnsupportedParity: return "unsupported-parity";
    case ErrorCode::kNearSingularity: return "near-singularity";
    case ErrorCode::kTooManyBins: return "too-many-bins";
    case ErrorCode::kInsufficientData: return "insufficient-data";
    case ErrorCode::kNumericalFailure: return "numerical-failure";
  }
  return "unknown";
}

std::string_view to_string(EnsembleKind kind) {
  return kind == EnsembleKind::kOrthogonal ? "orthogonal" : "unitary";
}

std::optional<EnsembleKind> parse_ensemble(std::string_view text) {
  if (text == "orthogonal" || text == "O") return EnsembleKind::kOrthogonal;
  if (text == "unitary" || text == "U") return EnsembleKind::kUnitary;
  return std::nullopt;
}

ProjectionConfig ProjectionConfig::make(int n, int k, int r) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidDimension,
                "N must be at least 2 (got " + std::to_string(n) + ")");
  }
  if (k < 1 || k > n - 1) {
    throw Error(ErrorCode::kInvalidDimension,
                "K must satisfy 1 <= K <= N-1 (got K=" + std::to_string(k) +
                    ", N=" + std::to_string(n) + ")");
  }
  if (r < 1 || r > n) {
    throw Error(ErrorCode::kInvalidDimension,
                "R must satisfy 1 <= R <= N (got R=" + std::to_string(r) +
                    ", N=" + std::to_string(n) + ")");
  }
  return ProjectionConfig{n, k, r};
}

}  // namespace projstat
