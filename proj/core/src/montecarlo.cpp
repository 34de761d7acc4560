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

#include "projstat/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "projstat/error.hpp"
#include "projstat/parallel.hpp"
#include "projstat/quadrature.hpp"
#include "projstat/sampling.hpp"

namespace projstat::montecarlo {
namespace {

constexpr double kMaxBins = 1e7;

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::uint64_t chunk_count(std::uint64_t draws) {
  return (draws + kChunkDraws - 1) / kChunkDraws;
}

}  // namespace

Histogram::Histogram(int dims, int bins) : dims_(dims), bins_(bins) {
  if (dims < 1 || dims > 3) {
    throw Error(ErrorCode::kInvalidDimension,
                "histograms are binned for 1 to 3 axes (got " + std::to_string(dims) + ")");
  }
  if (bins < 1) {
    throw Error(ErrorCode::kDomain, "bin count must be positive");
  }
  if (std::pow(static_cast<double>(bins), dims) > kMaxBins) {
    throw Error(ErrorCode::kTooManyBins,
                std::to_string(bins) + "^" + std::to_string(dims) +
                    " bins exceed the limit of 1e7");
  }
  counts_.assign(ipow(static_cast<std::size_t>(bins), dims), 0);
}

int Histogram::bin_of(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(ErrorCode::kDomain, "histogram value outside [0, 1]: " + std::to_string(t));
  }
  return std::min(static_cast<int>(t * bins_), bins_ - 1);
}

std::size_t Histogram::flat_index(std::span<const int> idx) const {
  std::size_t flat = 0;
  for (int d = 0; d < dims_; ++d) {
    flat = flat * static_cast<std::size_t>(bins_) + static_cast<std::size_t>(idx[d]);
  }
  return flat;
}

std::vector<int> Histogram::unflatten(std::size_t flat) const {
  std::vector<int> idx(static_cast<std::size_t>(dims_));
  for (int d = dims_ - 1; d >= 0; --d) {
    idx[static_cast<std::size_t>(d)] = static_cast<int>(flat % bins_);
    flat /= static_cast<std::size_t>(bins_);
  }
  return idx;
}

void Histogram::add(std::span<const double> t) {
  if (static_cast<int>(t.size()) < dims_) {
    throw Error(ErrorCode::kInvalidDimension, "sample has fewer coordinates than axes");
  }
  std::size_t flat = 0;
  for (int d = 0; d < dims_; ++d) {
    flat = flat * static_cast<std::size_t>(bins_) + static_cast<std::size_t>(bin_of(t[d]));
  }
  ++counts_[flat];
  ++total_;
}

void Histogram::merge(const Histogram& other) {
  if (other.dims_ != dims_ || other.bins_ != bins_) {
    throw Error(ErrorCode::kInvalidDimension, "cannot merge histograms of different shape");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  total_ += other.total_;
}

double Histogram::density(std::size_t flat) const {
  if (total_ == 0) return 0.0;
  const double volume = std::pow(width(), dims_);
  return static_cast<double>(counts_[flat]) / (static_cast<double>(total_) * volume);
}

Histogram Histogram::marginal(int axis) const {
  if (axis < 0 || axis >= dims_) {
    throw Error(ErrorCode::kInvalidDimension, "marginal axis out of range");
  }
  Histogram out(1, bins_);
  for (std::size_t flat = 0; flat < counts_.size(); ++flat) {
    out.counts_[static_cast<std::size_t>(unflatten(flat)[static_cast<std::size_t>(axis)])] +=
        counts_[flat];
  }
  out.total_ = total_;
  return out;
}

int chunk_workers(std::uint64_t draws, int threads) {
  return static_cast<int>(std::clamp<std::uint64_t>(
      static_cast<std::uint64_t>(std::max(threads, 1)), 1,
      std::max<std::uint64_t>(chunk_count(draws), 1)));
}

void for_each_chunk(std::uint64_t draws, std::uint64_t seed, int threads,
                    const ChunkFn& fn) {
  const std::uint64_t chunks = chunk_count(draws);
  parallel_for(static_cast<std::size_t>(chunks), chunk_workers(draws, threads),
               [&](int worker, std::size_t chunk) {
                 const std::uint64_t first = chunk * kChunkDraws;
                 const std::uint64_t count = std::min(kChunkDraws, draws - first);
                 Rng rng = make_stream(seed, chunk);
                 fn(worker, chunk, first, count, rng);
               });
}

JointEstimate estimate_joint(EnsembleKind ensemble, int n, int k, int r,
                             std::uint64_t draws, std::uint64_t seed,
                             const EstimateOptions& options) {
  ProjectionConfig::make(n, k, r);
  if (draws < 1) throw Error(ErrorCode::kDomain, "draws must be at least 1");
  JointEstimate est{ensemble, n, k, r, draws, seed, std::nullopt, {}};
  const bool binned = r <= 3;
  const bool keep = options.keep_samples || !binned;
  const int workers = chunk_workers(draws, options.threads);
  std::vector<Histogram> partial;
  if (binned) partial.assign(static_cast<std::size_t>(workers), Histogram(r, options.bins));
  if (keep) est.samples.resize(static_cast<std::size_t>(draws) * static_cast<std::size_t>(r));

  for_each_chunk(draws, seed, options.threads,
                 [&](int worker, std::size_t, std::uint64_t first, std::uint64_t count,
                     Rng& rng) {
                   for (std::uint64_t i = 0; i < count; ++i) {
                     const auto frame = sampling::sample_haar_columns(ensemble, n, r, rng);
                     const auto sample = sampling::projection_probs(frame, k, r);
                     if (binned) partial[static_cast<std::size_t>(worker)].add(sample.t);
                     if (keep) {
                       std::copy(sample.t.begin(), sample.t.end(),
                                 est.samples.begin() +
                                     static_cast<std::ptrdiff_t>((first + i) * r));
                     }
                   }
                 });
  if (binned) {
    Histogram total(r, options.bins);
    for (const auto& h : partial) total.merge(h);
    est.histogram = std::move(total);
  }
  return est;
}

FitReport compare(const Histogram& hist, const DensityFn& density,
                  const CompareOptions& options) {
  if (hist.total() == 0) {
    throw Error(ErrorCode::kInsufficientData, "cannot compare an empty histogram");
  }
  if (options.gl_order < 1) throw Error(ErrorCode::kDomain, "gl_order must be positive");
  const int dims = hist.dims();
  const auto rule = quadrature::gauss_legendre(options.gl_order);
  const double h = hist.width();
  const double volume = std::pow(h, dims);
  const std::size_t nodes = ipow(rule.nodes.size(), dims);

  FitReport report;
  report.n_draws = hist.total();

  std::vector<double> mass(hist.size(), 0.0);
  std::vector<char> included(hist.size(), 1);
  std::vector<double> lo(static_cast<std::size_t>(dims)), hi(lo), point(lo);
  double included_mass = 0.0;
  std::uint64_t included_draws = 0;
  for (std::size_t flat = 0; flat < hist.size(); ++flat) {
    const auto idx = hist.unflatten(flat);
    for (int d = 0; d < dims; ++d) {
      lo[d] = hist.edge(idx[d]);
      hi[d] = hist.edge(idx[d] + 1);
    }
    if (options.exclude && options.exclude(lo, hi)) {
      included[flat] = 0;
      ++report.bins_excluded;
      continue;
    }
    double sum = 0.0;
    for (std::size_t q = 0; q < nodes; ++q) {
      std::size_t rest = q;
      double w = 1.0;
      for (int d = 0; d < dims; ++d) {
        const std::size_t j = rest % rule.nodes.size();
        rest /= rule.nodes.size();
        point[d] = lo[d] + 0.5 * h * (rule.nodes[j] + 1.0);
        w *= rule.weights[j];
      }
      sum += w * density(point);
    }
    mass[flat] = sum * volume / std::pow(2.0, dims);
    included_mass += mass[flat];
    included_draws += hist.counts()[flat];
    ++report.bins_used;

    const double empirical = hist.density(flat);
    report.sup_norm = std::max(report.sup_norm, std::abs(empirical - mass[flat] / volume));
    for (int d = 0; d < dims; ++d) point[d] = hist.center(idx[d]);
    try {
      const double c = density(point);
      if (std::isfinite(c)) {
        report.sup_norm_center = std::max(report.sup_norm_center, std::abs(empirical - c));
      }
    } catch (const Error&) {
    }
  }
  if (!(included_mass > 0.0) || !std::isfinite(included_mass)) {
    throw Error(ErrorCode::kNumericalFailure,
                "analytic mass over the included bins is not positive and finite");
  }
  if (included_draws == 0) {
    throw Error(ErrorCode::kInsufficientData, "no draws fall into the included bins");
  }

  const double scale = static_cast<double>(included_draws) / included_mass;
  std::vector<std::pair<double, double>> groups;  // (observed, expected)
  double obs = 0.0, exp = 0.0;
  for (std::size_t flat = 0; flat < hist.size(); ++flat) {
    if (!included[flat]) continue;
    obs += static_cast<double>(hist.counts()[flat]);
    exp += mass[flat] * scale;
    if (exp >= options.min_expected) {
      groups.emplace_back(obs, exp);
      obs = exp = 0.0;
    }
  }
  if (exp > 0.0 || obs > 0.0) {
    if (groups.empty()) {
      groups.emplace_back(obs, exp);
    } else {
      groups.back().first += obs;
      groups.back().second += exp;
    }
  }
  for (const auto& [o, e] : groups) {
    if (e > 0.0) {
      report.chi2 += (o - e) * (o - e) / e;
    } else if (o > 0.0) {
      report.chi2 = std::numeric_limits<double>::infinity();
    }
  }
  report.groups = static_cast<int>(groups.size());
  report.dof = std::max(report.groups - 1, 0);
  report.p_value = report.dof > 0 ? chi2_p_value(report.chi2, report.dof) : 1.0;
  return report;
}

double chi2_p_value(double chi2, int dof) {
  if (dof < 1) throw Error(ErrorCode::kDomain, "chi-square needs at least one degree of freedom");
  if (!(chi2 >= 0.0)) throw Error(ErrorCode::kDomain, "chi-square statistic must be nonnegative");
  if (std::isinf(chi2)) return 0.0;
  return boost::math::gamma_q(0.5 * dof, 0.5 * chi2);
}

double kolmogorov_q(double lambda) {
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  for (int j = 1; j <= 200; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += (j % 2 == 1 ? term : -term);
    if (term < 1e-18) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_one_sample(std::vector<double> sample,
                       const std::function<double(double)>& cdf) {
  if (sample.empty()) throw Error(ErrorCode::kInsufficientData, "KS test on an empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  const double sn = std::sqrt(n);
  return {d, kolmogorov_q((sn + 0.12 + 0.11 / sn) * d)};
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::kInsufficientData, "KS test on an empty sample");
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  const double ne = std::sqrt(na * nb / (na + nb));
  return {d, kolmogorov_q((ne + 0.12 + 0.11 / ne) * d)};
}

double onepoint_cdf(EnsembleKind ensemble, int n, int k, double t) {
  ProjectionConfig::make(n, k, 1);
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double m = ensemble == EnsembleKind::kOrthogonal ? 0.5 * (n - k) : n - k;
  const double kk = ensemble == EnsembleKind::kOrthogonal ? 0.5 * k : k;
  return boost::math::ibeta(kk, m, t);
}

Density1D scalar_density(std::uint64_t draws, int bins, double lo, double hi,
                         std::uint64_t seed, int threads,
                         const std::function<double(Rng&)>& draw) {
  if (draws < 1) throw Error(ErrorCode::kDomain, "draws must be at least 1");
  if (bins < 1) throw Error(ErrorCode::kDomain, "bin count must be positive");
  if (!(hi > lo)) throw Error(ErrorCode::kDomain, "empty histogram range");
  const int workers = chunk_workers(draws, threads);
  std::vector<std::vector<std::uint64_t>> counts(
      static_cast<std::size_t>(workers),
      std::vector<std::uint64_t>(static_cast<std::size_t>(bins), 0));
  const std::size_t chunks = static_cast<std::size_t>(chunk_count(draws));
  std::vector<double> sums(chunks, 0.0), sums2(chunks, 0.0);
  const double width = (hi - lo) / bins;
  const double slack = 1e-12 * (hi - lo);

  for_each_chunk(draws, seed, threads,
                 [&](int worker, std::size_t chunk, std::uint64_t, std::uint64_t count,
                     Rng& rng) {
                   auto& local = counts[static_cast<std::size_t>(worker)];
                   double s = 0.0, s2 = 0.0;
                   for (std::uint64_t i = 0; i < count; ++i) {
                     const double x = draw(rng);
                     if (!(x >= lo - slack && x <= hi + slack)) {
                       throw Error(ErrorCode::kDomain,
                                   "value " + std::to_string(x) + " outside histogram range");
                     }
                     const int b = std::clamp(static_cast<int>((x - lo) / width), 0, bins - 1);
                     ++local[static_cast<std::size_t>(b)];
                     s += x;
                     s2 += x * x;
                   }
                   sums[chunk] = s;
                   sums2[chunk] = s2;
                 });

  Density1D out;
  out.draws = draws;
  out.seed = seed;
  out.edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int i = 0; i <= bins; ++i) out.edges[static_cast<std::size_t>(i)] = lo + i * width;
  out.edges.back() = hi;
  out.centers.resize(static_cast<std::size_t>(bins));
  out.values.assign(static_cast<std::size_t>(bins), 0.0);
  const double total = static_cast<double>(draws);
  for (int i = 0; i < bins; ++i) {
    std::uint64_t c = 0;
    for (const auto& local : counts) c += local[static_cast<std::size_t>(i)];
    out.centers[static_cast<std::size_t>(i)] = lo + (i + 0.5) * width;
    out.values[static_cast<std::size_t>(i)] = static_cast<double>(c) / (total * width);
  }
  double s = 0.0, s2 = 0.0;
  for (std::size_t c = 0; c < chunks; ++c) {
    s += sums[c];
    s2 += sums2[c];
  }
  out.mean = s / total;
  if (draws > 1) {
    const double var = std::max(0.0, (s2 - total * out.mean * out.mean) / (total - 1.0));
    out.std_error = std::sqrt(var / total);
  }
  return out;
}

Density1D mixture_density(EnsembleKind ensemble, int n, int k,
                          std::span<const double> weights, std::uint64_t draws,
                          int bins, std::uint64_t seed, int threads) {
  const int r = static_cast<int>(weights.size());
  ProjectionConfig::make(n, k, r);
  std::vector<double> w(weights.begin(), weights.end());
  // Validates the weights once up front.
  sampling::weighted_mixture_prob(std::vector<double>(w.size(), 0.0), w);
  return scalar_density(draws, bins, 0.0, 1.0, seed, threads, [&](Rng& rng) {
    const auto frame = sampling::sample_haar_columns(ensemble, n, r, rng);
    return sampling::weighted_mixture_prob(sampling::projection_probs(frame, k, r), w);
  });
}

}  // namespace projstat::montecarlo
