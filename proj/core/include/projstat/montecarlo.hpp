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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "projstat/rng.hpp"
#include "projstat/types.hpp"

namespace projstat::montecarlo {

/// Equal-width histogram on [0, 1]^dims, dims in {1, 2, 3}. Bins are
/// half-open [lo, hi) except the last bin on each axis, which also takes 1.
class Histogram {
 public:
  Histogram(int dims, int bins);

  int dims() const noexcept { return dims_; }
  int bins() const noexcept { return bins_; }
  std::uint64_t total() const noexcept { return total_; }
  std::size_t size() const noexcept { return counts_.size(); }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }

  double width() const noexcept { return 1.0 / bins_; }
  double edge(int i) const noexcept { return static_cast<double>(i) / bins_; }
  double center(int i) const noexcept { return (i + 0.5) / bins_; }

  /// Bin index of t along one axis; values outside [0, 1] throw kDomain.
  int bin_of(double t) const;
  /// Flat index with the first axis varying slowest.
  std::size_t flat_index(std::span<const int> idx) const;
  std::vector<int> unflatten(std::size_t flat) const;

  void add(std::span<const double> t);
  void merge(const Histogram& other);

  /// counts / (total * bin volume); zero for an empty histogram.
  double density(std::size_t flat) const;

  /// Sum over every axis except `axis`.
  Histogram marginal(int axis) const;

  friend bool operator==(const Histogram&, const Histogram&) = default;

 private:
  int dims_;
  int bins_;
  std::uint64_t total_ = 0;
  std::vector<std::uint64_t> counts_;
};

struct EstimateOptions {
  int bins = 50;
  int threads = 1;
  /// Keep the raw t vectors (always kept when R > 3).
  bool keep_samples = false;
};

struct JointEstimate {
  EnsembleKind ensemble;
  int n;
  int k;
  int r;
  std::uint64_t draws;
  std::uint64_t seed;
  /// Present for R <= 3.
  std::optional<Histogram> histogram;
  /// Row-major draws x R, when requested or R > 3.
  std::vector<double> samples;
};

/// Draws chunked into fixed blocks, each with its own RNG stream, so the
/// result depends on the seed only and not on the thread count.
inline constexpr std::uint64_t kChunkDraws = 4096;

/// Empirical joint density of (t_1, ..., t_R). bins^R > 1e7 throws
/// kTooManyBins.
JointEstimate estimate_joint(EnsembleKind ensemble, int n, int k, int r,
                             std::uint64_t draws, std::uint64_t seed,
                             const EstimateOptions& options = {});

/// Runs fn(worker, chunk_index, first_draw, draw_count, rng) for every chunk
/// of `draws`, spread across `threads` workers. `rng` is the chunk's stream.
using ChunkFn = std::function<void(int, std::size_t, std::uint64_t,
                                   std::uint64_t, Rng&)>;
void for_each_chunk(std::uint64_t draws, std::uint64_t seed, int threads,
                    const ChunkFn& fn);

/// Number of workers for_each_chunk actually uses.
int chunk_workers(std::uint64_t draws, int threads);

/// Density of one point of the histogram support, t.size() == dims.
using DensityFn = std::function<double(std::span<const double>)>;

struct CompareOptions {
  /// Gauss-Legendre points per axis for the expected bin masses.
  int gl_order = 8;
  double min_expected = 5.0;
  /// Bins for which this returns true are left out of the test; arguments
  /// are the lower and upper corners of the bin.
  std::function<bool(std::span<const double>, std::span<const double>)> exclude;
};

struct FitReport {
  double chi2 = 0.0;
  int dof = 0;
  double p_value = 1.0;
  /// max |empirical - bin average of analytic| over the included bins.
  double sup_norm = 0.0;
  /// max |empirical - analytic at bin center| over included bins with a
  /// finite center value.
  double sup_norm_center = 0.0;
  std::uint64_t n_draws = 0;
  std::uint64_t seed = 0;
  int bins_used = 0;
  int bins_excluded = 0;
  int groups = 0;
};

/// Chi-square and sup-norm comparison of a 1D or 2D histogram with an
/// analytic density. Expected counts come from bin integrals, rescaled to
/// the number of draws in the included bins; adjacent bins (flat order) are
/// pooled until each group expects at least min_expected counts.
FitReport compare(const Histogram& hist, const DensityFn& density,
                  const CompareOptions& options = {});

/// Upper tail of the chi-square law, Q(dof/2, chi2/2).
double chi2_p_value(double chi2, int dof);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// Kolmogorov limiting tail Q(lambda) = 2 sum (-1)^{j-1} exp(-2 j^2 lambda^2).
double kolmogorov_q(double lambda);

/// One-sample Kolmogorov-Smirnov test against a continuous CDF.
KsResult ks_one_sample(std::vector<double> sample,
                       const std::function<double(double)>& cdf);
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

/// CDF of the one-point law (regularized incomplete beta).
double onepoint_cdf(EnsembleKind ensemble, int n, int k, double t);

/// Histogram of a scalar statistic on [lo, hi].
struct Density1D {
  std::vector<double> edges;
  std::vector<double> centers;
  std::vector<double> values;
  std::uint64_t draws = 0;
  std::uint64_t seed = 0;
  double mean = 0.0;
  double std_error = 0.0;
};

/// Histogram of draw(rng) with `bins` equal bins on [lo, hi]; values outside
/// the range throw kDomain. Chunked like estimate_joint.
Density1D scalar_density(std::uint64_t draws, int bins, double lo, double hi,
                         std::uint64_t seed, int threads,
                         const std::function<double(Rng&)>& draw);

/// Distribution of the measurement probability sum_xi p_xi t_xi for the
/// first R = weights.size() projection probabilities.
Density1D mixture_density(EnsembleKind ensemble, int n, int k,
                          std::span<const double> weights, std::uint64_t draws,
                          int bins, std::uint64_t seed, int threads = 1);

}  // namespace projstat::montecarlo
