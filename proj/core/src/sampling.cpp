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

#include "projstat/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "projstat/error.hpp"

namespace projstat::sampling {
namespace {

using cplx = std::complex<double>;

// Q factor of a thin QR with the positive-diagonal convention.
template <typename Matrix>
Matrix haar_q(const Matrix& ginibre) {
  const Eigen::Index n = ginibre.rows();
  const Eigen::Index cols = ginibre.cols();
  Eigen::HouseholderQR<Matrix> qr(ginibre);
  Matrix q = qr.householderQ() * Matrix::Identity(n, cols);
  const auto& packed = qr.matrixQR();
  for (Eigen::Index c = 0; c < cols; ++c) {
    const auto diag = packed(c, c);
    const double mag = std::abs(diag);
    if (mag > 0.0) {
      // Q R = (Q D) (D^* R) with D = diag(r_cc / |r_cc|).
      q.col(c) *= diag / mag;
    }
  }
  return q;
}

void check_dims(int n, int cols) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidDimension,
                "Haar sampling requires N >= 1 (got " + std::to_string(n) + ")");
  }
  if (cols < 1 || cols > n) {
    throw Error(ErrorCode::kInvalidDimension,
                "column count must satisfy 1 <= cols <= N (got " +
                    std::to_string(cols) + ")");
  }
}

}  // namespace

FrameSample::FrameSample(Eigen::MatrixXd real) : entries_(std::move(real)) {}
FrameSample::FrameSample(Eigen::MatrixXcd complex)
    : entries_(std::move(complex)) {}

EnsembleKind FrameSample::ensemble() const noexcept {
  return std::holds_alternative<Eigen::MatrixXd>(entries_)
             ? EnsembleKind::kOrthogonal
             : EnsembleKind::kUnitary;
}

int FrameSample::rows() const noexcept {
  return std::visit([](const auto& m) { return static_cast<int>(m.rows()); },
                    entries_);
}

int FrameSample::cols() const noexcept {
  return std::visit([](const auto& m) { return static_cast<int>(m.cols()); },
                    entries_);
}

double FrameSample::abs2(int row, int col) const {
  if (const auto* m = real()) {
    const double x = (*m)(row, col);
    return x * x;
  }
  return std::norm((*complex())(row, col));
}

const Eigen::MatrixXd* FrameSample::real() const noexcept {
  return std::get_if<Eigen::MatrixXd>(&entries_);
}

const Eigen::MatrixXcd* FrameSample::complex() const noexcept {
  return std::get_if<Eigen::MatrixXcd>(&entries_);
}

double FrameSample::orthonormality_defect() const {
  return std::visit(
      [](const auto& m) {
        const auto gram = (m.adjoint() * m).eval();
        double worst = 0.0;
        for (Eigen::Index i = 0; i < gram.rows(); ++i) {
          for (Eigen::Index j = 0; j < gram.cols(); ++j) {
            const double delta = (i == j) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(gram(i, j) - delta));
          }
        }
        return worst;
      },
      entries_);
}

FrameSample FrameSample::left_multiplied(const Eigen::MatrixXd& v) const {
  if (const auto* m = real()) return FrameSample(Eigen::MatrixXd(v * *m));
  return FrameSample(Eigen::MatrixXcd(v.cast<cplx>() * *complex()));
}

FrameSample FrameSample::left_multiplied(const Eigen::MatrixXcd& v) const {
  if (real() != nullptr) {
    throw Error(ErrorCode::kDomain,
                "a complex group element cannot act on an orthogonal frame");
  }
  return FrameSample(Eigen::MatrixXcd(v * *complex()));
}

FrameSample sample_haar(EnsembleKind ensemble, int n, Rng& rng) {
  check_dims(n, n);
  return sample_haar_columns(ensemble, n, n, rng);
}

FrameSample sample_haar_columns(EnsembleKind ensemble, int n, int cols,
                                Rng& rng) {
  check_dims(n, cols);
  std::normal_distribution<double> gauss(0.0, 1.0);
  if (ensemble == EnsembleKind::kOrthogonal) {
    Eigen::MatrixXd g(n, cols);
    for (int c = 0; c < cols; ++c) {
      for (int r = 0; r < n; ++r) g(r, c) = gauss(rng);
    }
    return FrameSample(haar_q(g));
  }
  Eigen::MatrixXcd g(n, cols);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < n; ++r) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(r, c) = cplx(re, im);
    }
  }
  return FrameSample(haar_q(g));
}

JointSample projection_probs(const FrameSample& frame, int k, int r) {
  const int n = frame.rows();
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidDimension,
                "K must satisfy 1 <= K <= N (got K=" + std::to_string(k) + ")");
  }
  if (r < 1 || r > frame.cols()) {
    throw Error(ErrorCode::kInvalidDimension,
                "R must satisfy 1 <= R <= available columns (got R=" +
                    std::to_string(r) + ")");
  }
  JointSample out;
  out.t.resize(static_cast<std::size_t>(r));
  for (int xi = 0; xi < r; ++xi) {
    double sum = 0.0;
    for (int j = 0; j < k; ++j) sum += frame.abs2(j, xi);
    out.t[static_cast<std::size_t>(xi)] = std::clamp(sum, 0.0, 1.0);
  }
  return out;
}

std::vector<double> partial_conductances(const FrameSample& frame, int k) {
  const int n = frame.rows();
  if (frame.cols() != n) {
    throw Error(ErrorCode::kInvalidDimension,
                "partial conductances need a full N x N scattering matrix");
  }
  if (k < 1 || k >= n) {
    throw Error(ErrorCode::kInvalidDimension,
                "partial conductances require 1 <= K < N (got K=" +
                    std::to_string(k) + ")");
  }
  std::vector<double> t;
  t.reserve(static_cast<std::size_t>(n - k));
  for (int xi = k; xi < n; ++xi) {
    double sum = 0.0;
    for (int j = 0; j < k; ++j) sum += frame.abs2(j, xi);
    t.push_back(std::clamp(sum, 0.0, 1.0));
  }
  return t;
}

double weighted_mixture_prob(std::span<const double> t,
                             std::span<const double> weights) {
  if (weights.size() != t.size()) {
    throw Error(ErrorCode::kInvalidWeights,
                "weight count " + std::to_string(weights.size()) +
                    " does not match sample length " + std::to_string(t.size()));
  }
  double total = 0.0;
  for (double p : weights) {
    if (!(p >= 0.0)) {
      throw Error(ErrorCode::kInvalidWeights, "weights must be nonnegative");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidWeights, "weights must sum to one");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) acc += weights[i] * t[i];
  return std::clamp(acc, 0.0, 1.0);
}

}  // namespace projstat::sampling
