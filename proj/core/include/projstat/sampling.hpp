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

#include <Eigen/Dense>

#include <span>
#include <variant>
#include <vector>

#include "projstat/rng.hpp"
#include "projstat/types.hpp"

namespace projstat::sampling {

/// A Haar-random frame: N rows, and either all N columns (a full group
/// element) or only the leading columns of one.
///
/// Orthogonal frames hold real entries, unitary frames complex entries.
class FrameSample {
 public:
  explicit FrameSample(Eigen::MatrixXd real);
  explicit FrameSample(Eigen::MatrixXcd complex);

  EnsembleKind ensemble() const noexcept;
  int rows() const noexcept;
  int cols() const noexcept;

  /// |w_{j xi}|^2
  double abs2(int row, int col) const;

  const Eigen::MatrixXd* real() const noexcept;
  const Eigen::MatrixXcd* complex() const noexcept;

  /// Largest |<w_mu|w_nu> - delta_{mu nu}| over all column pairs.
  double orthonormality_defect() const;

  /// Left-multiplies the frame by `v` (N x N). A real `v` acting on a
  /// complex frame is promoted; a complex `v` requires a unitary frame.
  FrameSample left_multiplied(const Eigen::MatrixXd& v) const;
  FrameSample left_multiplied(const Eigen::MatrixXcd& v) const;

 private:
  std::variant<Eigen::MatrixXd, Eigen::MatrixXcd> entries_;
};

/// Probabilities t_1..t_R from one draw.
struct JointSample {
  std::vector<double> t;
};

/// Full N x N Haar-random group element.
///
/// Ginibre matrix (i.i.d. N(0,1) real and imaginary parts) followed by
/// Householder QR; every column of Q is rescaled so that the corresponding
/// diagonal entry of R is real and positive.
FrameSample sample_haar(EnsembleKind ensemble, int n, Rng& rng);

/// The first `cols` columns of a Haar-random group element. Same law as the
/// leading columns of sample_haar() at O(N cols^2) cost.
FrameSample sample_haar_columns(EnsembleKind ensemble, int n, int cols,
                                Rng& rng);

/// t_xi = sum_{j<K} |w_{j xi}|^2 for the first R columns.
JointSample projection_probs(const FrameSample& frame, int k, int r);

/// Partial conductances of the off-diagonal block: for each of the last N-K
/// columns, the squared norm of its first K entries. Their sum is the
/// two-terminal conductance g in units of 2e^2/h.
std::vector<double> partial_conductances(const FrameSample& frame, int k);

/// Sum_xi p_xi t_xi. Weights must be nonnegative and sum to one within 1e-12.
double weighted_mixture_prob(std::span<const double> t,
                             std::span<const double> weights);
inline double weighted_mixture_prob(const JointSample& sample,
                                    std::span<const double> weights) {
  return weighted_mixture_prob(sample.t, weights);
}

}  // namespace projstat::sampling
