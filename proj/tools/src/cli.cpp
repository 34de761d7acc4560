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

#include "projstat_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <variant>

#include "projstat/analytic.hpp"
#include "projstat/conductance.hpp"
#include "projstat/error.hpp"
#include "projstat/montecarlo.hpp"
#include "projstat/parallel.hpp"
#include "projstat/sampling.hpp"
#include "projstat/version.hpp"

namespace projstat::cli {
namespace {

using json = nlohmann::ordered_json;
using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// A finished command: metadata plus either a table or a flat record.
struct Output {
  json metadata;
  Table table;
  json record;  // used instead of the table for JSON when non-null
  int exit_code = kOk;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

EnsembleKind ensemble_of(const RunConfig& cfg) {
  const auto e = parse_ensemble(cfg.ensemble);
  if (!e) throw UsageError("unknown ensemble '" + cfg.ensemble + "'");
  return *e;
}

std::string join_command_line(const std::vector<std::string>& args) {
  std::string line;
  for (const auto& a : args) {
    if (!line.empty()) line += ' ';
    if (a.find_first_of(" \t\"'") != std::string::npos) {
      line += '"' + a + '"';
    } else {
      line += a;
    }
  }
  return line;
}

json base_metadata(const RunConfig& cfg) {
  json m;
  m["tool"] = "projstat";
  m["version"] = kVersion;
  m["command_line"] = cfg.command_line;
  m["command"] = cfg.command;
  m["seed"] = cfg.seed;
  m["ensemble"] = std::string(to_string(ensemble_of(cfg)));
  m["N"] = cfg.n;
  m["K"] = cfg.k;
  m["R"] = cfg.r;
  m["threads"] = cfg.threads;
  return m;
}

json cell_to_json(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return nullptr;
    return *d;
  }
  return std::get<std::string>(c);
}

std::string render(const Output& o, Format format) {
  std::ostringstream s;
  if (format == Format::kJson) {
    json doc;
    doc["metadata"] = o.metadata;
    if (!o.record.is_null()) {
      for (const auto& [key, value] : o.record.items()) doc[key] = value;
    } else {
      doc["columns"] = o.table.columns;
      json rows = json::array();
      for (const auto& row : o.table.rows) {
        json r = json::array();
        for (const auto& c : row) r.push_back(cell_to_json(c));
        rows.push_back(std::move(r));
      }
      doc["rows"] = std::move(rows);
    }
    s << doc.dump(2) << '\n';
    return s.str();
  }
  for (const auto& [key, value] : o.metadata.items()) {
    s << "# " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
      << '\n';
  }
  for (std::size_t i = 0; i < o.table.columns.size(); ++i) {
    s << (i ? "," : "") << o.table.columns[i];
  }
  s << '\n';
  for (const auto& row : o.table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) s << ',';
      if (const double* d = std::get_if<double>(&row[i])) {
        s << format_number(*d);
      } else {
        s << std::get<std::string>(row[i]);
      }
    }
    s << '\n';
  }
  return s.str();
}

analytic::Options analytic_options(const RunConfig& cfg) {
  analytic::Options o;
  o.abs_tol = cfg.tolerance;
  o.eps_ts = cfg.eps_ts;
  return o;
}

void check_weights(const RunConfig& cfg, int expected, const char* what) {
  if (static_cast<int>(cfg.weights.size()) != expected) {
    throw UsageError("--weights needs " + std::to_string(expected) + " values (" + what +
                     "), got " + std::to_string(cfg.weights.size()));
  }
}

Output cmd_sample(const RunConfig& cfg) {
  const EnsembleKind ens = ensemble_of(cfg);
  ProjectionConfig::make(cfg.n, cfg.k, cfg.r);
  const std::uint64_t draws = cfg.draws_given ? cfg.draws : 1000;
  if (draws < 1) throw UsageError("--draws must be at least 1");
  const bool with_tbar = !cfg.weights.empty();
  if (with_tbar) {
    check_weights(cfg, cfg.r, "one per sampled vector");
    sampling::weighted_mixture_prob(std::vector<double>(cfg.weights.size(), 0.0), cfg.weights);
  }

  Output o;
  o.metadata = base_metadata(cfg);
  o.metadata["draws"] = draws;
  for (int i = 1; i <= cfg.r; ++i) o.table.columns.push_back("t" + std::to_string(i));
  if (cfg.with_g) o.table.columns.push_back("g");
  if (with_tbar) o.table.columns.push_back("tbar");
  const std::size_t width = o.table.columns.size();

  std::vector<double> values(static_cast<std::size_t>(draws) * width);
  montecarlo::for_each_chunk(
      draws, cfg.seed, cfg.threads,
      [&](int, std::size_t, std::uint64_t first, std::uint64_t count, Rng& rng) {
        for (std::uint64_t i = 0; i < count; ++i) {
          const auto frame = sampling::sample_haar(ens, cfg.n, rng);
          const auto t = sampling::projection_probs(frame, cfg.k, cfg.r).t;
          double* row = values.data() + (first + i) * width;
          std::size_t c = 0;
          for (double x : t) row[c++] = x;
          if (cfg.with_g) {
            double g = 0.0;
            for (double x : sampling::partial_conductances(frame, cfg.k)) g += x;
            row[c++] = g;
          }
          if (with_tbar) row[c++] = sampling::weighted_mixture_prob(t, cfg.weights);
        }
      });
  o.table.rows.resize(static_cast<std::size_t>(draws));
  for (std::size_t i = 0; i < o.table.rows.size(); ++i) {
    o.table.rows[i].assign(values.begin() + static_cast<std::ptrdiff_t>(i * width),
                           values.begin() + static_cast<std::ptrdiff_t>((i + 1) * width));
  }
  return o;
}

Output cmd_density(const RunConfig& cfg) {
  const EnsembleKind ens = ensemble_of(cfg);
  const auto [g1, g2] = parse_grid(cfg.grid);
  const auto opts = analytic_options(cfg);
  Output o;
  o.metadata = base_metadata(cfg);
  o.metadata["grid"] = cfg.grid;
  o.metadata["tolerance"] = cfg.tolerance;
  o.metadata["eps_ts"] = cfg.eps_ts;

  if (cfg.r == 1) {
    ProjectionConfig::make(cfg.n, cfg.k, 1);
    o.table.columns = {"t", "value", "method", "est_error"};
    for (double t : midpoint_grid(g1)) {
      const auto d = analytic::onepoint_density(ens, cfg.n, cfg.k, t);
      o.table.rows.push_back({t, d.value, std::string(analytic::to_string(d.method)),
                              d.est_error});
    }
    return o;
  }
  if (cfg.r != 2) {
    throw UsageError("density tabulates R = 1 or R = 2; higher R is Monte Carlo only "
                     "(use 'sample')");
  }
  const auto t1s = midpoint_grid(g1);
  const auto t2s = midpoint_grid(g2);
  const auto grid = analytic::density_grid(ens, cfg.n, cfg.k, t1s, t2s, opts, cfg.threads);
  o.table.columns = {"t1", "t2", "value", "method", "est_error"};
  o.table.rows.reserve(grid.size());
  for (const auto& p : grid) {
    o.table.rows.push_back({p.t1, p.t2, p.density.value,
                            std::string(analytic::to_string(p.density.method)),
                            p.density.est_error});
  }
  return o;
}

Output cmd_compare(const RunConfig& cfg) {
  const EnsembleKind ens = ensemble_of(cfg);
  if (cfg.r != 1 && cfg.r != 2) {
    throw UsageError("compare supports R = 1 (one-point law) or R = 2 (two-point law)");
  }
  ProjectionConfig::make(cfg.n, cfg.k, cfg.r);
  const int analytic_k = cfg.analytic_k > 0 ? cfg.analytic_k : cfg.k;
  ProjectionConfig::make(cfg.n, analytic_k, cfg.r);
  const std::uint64_t draws = cfg.draws_given ? cfg.draws : 1000000;
  const int bins = cfg.bins > 0 ? cfg.bins : (cfg.r == 1 ? 20 : 50);
  const auto opts = analytic_options(cfg);

  montecarlo::DensityFn density;
  montecarlo::CompareOptions copts;
  if (cfg.r == 1) {
    density = [&](std::span<const double> t) {
      return analytic::onepoint_density(ens, cfg.n, analytic_k, t[0]).value;
    };
  } else {
    // Fail early, before sampling, on configurations without a two-point law.
    analytic::TwoPointIntegrand::make(ens, cfg.n, analytic_k, 0.5, 0.25);
    density = [&](std::span<const double> t) {
      return analytic::density_auto(ens, cfg.n, analytic_k, t[0], t[1], opts).value;
    };
    if (ens == EnsembleKind::kOrthogonal) {
      const double eps = cfg.eps_ts;
      copts.exclude = [eps](std::span<const double> lo, std::span<const double> hi) {
        return lo[0] + lo[1] - 1.0 < eps && hi[0] + hi[1] - 1.0 > -eps;
      };
    }
  }
  if (draws < 1) throw UsageError("--draws must be at least 1");

  montecarlo::EstimateOptions eopts;
  eopts.bins = bins;
  eopts.threads = cfg.threads;
  const auto est = montecarlo::estimate_joint(ens, cfg.n, cfg.k, cfg.r, draws, cfg.seed, eopts);
  auto rep = montecarlo::compare(*est.histogram, density, copts);
  rep.seed = cfg.seed;
  const bool accepted = rep.p_value >= cfg.threshold;

  Output o;
  o.metadata = base_metadata(cfg);
  o.metadata["draws"] = draws;
  o.metadata["bins"] = bins;
  o.metadata["analytic_K"] = analytic_k;
  o.metadata["eps_ts"] = cfg.eps_ts;
  o.metadata["threshold"] = cfg.threshold;
  o.record["seed"] = rep.seed;
  o.record["draws"] = rep.n_draws;
  o.record["bins"] = bins;
  o.record["chi2"] = rep.chi2;
  o.record["dof"] = rep.dof;
  o.record["p_value"] = rep.p_value;
  o.record["sup_norm"] = rep.sup_norm;
  o.record["sup_norm_center"] = rep.sup_norm_center;
  o.record["bins_used"] = rep.bins_used;
  o.record["bins_excluded"] = rep.bins_excluded;
  o.record["groups"] = rep.groups;
  o.record["threshold"] = cfg.threshold;
  o.record["accepted"] = accepted;
  for (const auto& [key, value] : o.record.items()) {
    o.table.columns.push_back(key);
    if (value.is_boolean()) {
      o.table.rows.resize(1);
      o.table.rows[0].push_back(std::string(value.get<bool>() ? "true" : "false"));
    } else {
      o.table.rows.resize(1);
      o.table.rows[0].push_back(value.get<double>());
    }
  }
  o.exit_code = accepted ? kOk : kRejected;
  return o;
}

Output cmd_conductance(const RunConfig& cfg) {
  const EnsembleKind ens = ensemble_of(cfg);
  ProjectionConfig::make(cfg.n, cfg.k, 1);
  const std::uint64_t draws = cfg.draws_given ? cfg.draws : 1000000;
  const int bins = cfg.bins > 0 ? cfg.bins : 50;
  const double top = conductance::g_max(cfg.n, cfg.k);

  Output o;
  o.metadata = base_metadata(cfg);
  o.metadata.erase("R");
  o.metadata["draws"] = draws;
  o.metadata["bins"] = bins;
  o.metadata["tolerance"] = cfg.tolerance;
  o.metadata["physical"] = ens == EnsembleKind::kUnitary;

  if (!cfg.weights.empty()) {
    check_weights(cfg, cfg.n - cfg.k, "one per transmitting channel, N-K");
    if (draws < 1) throw UsageError("weighted conductance is Monte Carlo only; --draws >= 1");
    const auto mc = conductance::weighted_g_monte_carlo(ens, cfg.n, cfg.k, cfg.weights, draws,
                                                        bins, cfg.seed, cfg.threads);
    o.metadata["statistic"] = "weighted";
    o.metadata["mean"] = mc.mean;
    o.metadata["std_error"] = mc.std_error;
    o.table.columns = {"g", "p_mc"};
    for (std::size_t i = 0; i < mc.grid.size(); ++i) {
      o.table.rows.push_back({mc.grid[i], mc.values[i]});
    }
    return o;
  }

  const bool closed = ens == EnsembleKind::kUnitary && cfg.n == 4 && cfg.k == 2;
  const bool convolution =
      conductance::convolution_supported(cfg.n, cfg.k) &&
      cfg.n >= (ens == EnsembleKind::kOrthogonal ? 4 : 3);
  const bool monte_carlo = draws > 0;

  std::vector<double> grid;
  conductance::ConductanceDensity mc;
  if (monte_carlo) {
    mc = conductance::p_g_monte_carlo(ens, cfg.n, cfg.k, draws, bins, cfg.seed, cfg.threads);
    grid = mc.grid;
    o.metadata["mean"] = mc.mean;
    o.metadata["std_error"] = mc.std_error;
  } else {
    const int points = parse_grid(cfg.grid).first;
    if (points < 2) throw UsageError("--grid needs at least 2 points for the g axis");
    for (int i = 0; i < points; ++i) grid.push_back(top * i / (points - 1));
  }

  std::vector<double> conv(grid.size());
  if (convolution) {
    conductance::ConvolutionOptions copts;
    copts.density = analytic_options(cfg);
    copts.abs_tol = cfg.tolerance;
    parallel_for(grid.size(), cfg.threads, [&](int, std::size_t i) {
      try {
        conv[i] = conductance::p_g_convolution(ens, cfg.n, cfg.k, grid[i], copts);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kSingularity) throw;
        conv[i] = std::numeric_limits<double>::infinity();
      }
    });
  }

  o.table.columns = {"g"};
  if (closed) o.table.columns.push_back("p_closed");
  if (convolution) o.table.columns.push_back("p_convolution");
  if (monte_carlo) o.table.columns.push_back("p_mc");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<Cell> row{grid[i]};
    if (closed) row.push_back(conductance::p_g_closed_42(grid[i]));
    if (convolution) row.push_back(conv[i]);
    if (monte_carlo) row.push_back(mc.values[i]);
    o.table.rows.push_back(std::move(row));
  }
  return o;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSingularity:
    case ErrorCode::kNearSingularity:
    case ErrorCode::kNumericalFailure:
      return kNumerical;
    default:
      return kUsage;
  }
}

void add_common(CLI::App* sub, RunConfig& cfg, std::map<std::string, CLI::Option*>& opts) {
  sub->add_option("--ensemble", cfg.ensemble, "orthogonal | unitary")
      ->check(CLI::IsMember({"orthogonal", "unitary", "O", "U"}));
  sub->add_option("-N", cfg.n, "Ambient dimension N");
  sub->add_option("-K", cfg.k, "Subspace dimension K");
  opts["R"] = sub->add_option("-R", cfg.r, "Number of vectors R");
  opts["draws"] = sub->add_option("--draws", cfg.draws, "Monte Carlo draws");
  sub->add_option("--bins", cfg.bins, "Histogram bins per axis");
  sub->add_option("--seed", cfg.seed, "Master RNG seed");
  sub->add_option("--grid", cfg.grid, "Grid points, G or G1xG2");
  sub->add_option("--out", cfg.out, "Output path, '-' for stdout");
  opts["format"] = sub->add_option("--format", cfg.format, "csv | json")
                       ->transform(CLI::CheckedTransformer(
                           std::map<std::string, Format>{{"csv", Format::kCsv},
                                                         {"json", Format::kJson}}));
  sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--tolerance", cfg.tolerance, "Absolute quadrature tolerance")
      ->check(CLI::PositiveNumber);
  sub->add_option("--eps-ts", cfg.eps_ts, "Orthogonal near-singular strip half-width")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

std::pair<int, int> parse_grid(const std::string& text) {
  const auto parse = [&](const std::string& part) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || part.empty() || v < 1 || v > 100000) {
      throw UsageError("bad --grid '" + text + "': expected G or G1xG2 with 1 <= G <= 100000");
    }
    return v;
  };
  const auto x = text.find('x');
  if (x == std::string::npos) {
    const int g = parse(text);
    return {g, g};
  }
  return {parse(text.substr(0, x)), parse(text.substr(x + 1))};
}

std::vector<double> midpoint_grid(int count) {
  std::vector<double> g(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) g[static_cast<std::size_t>(i)] = (i + 0.5) / count;
  return g;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.command_line = join_command_line(args);
  cfg.threads = default_threads();

  CLI::App app{"Projection-probability statistics of Haar-random frames", "projstat"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  std::map<std::string, std::map<std::string, CLI::Option*>> opts;

  auto* sample = app.add_subcommand("sample", "Draw projection probabilities t_1..t_R");
  add_common(sample, cfg, opts["sample"]);
  sample->add_flag("--with-g", cfg.with_g, "Append the conductance g of each draw");
  sample->add_option("--weights", cfg.weights, "Mixture weights p_1..p_R (comma separated)")
      ->delimiter(',');

  auto* density = app.add_subcommand("density", "Tabulate the analytic density on a grid");
  add_common(density, cfg, opts["density"]);

  auto* compare = app.add_subcommand("compare", "Monte Carlo histogram vs analytic density");
  add_common(compare, cfg, opts["compare"]);
  compare->add_option("--threshold", cfg.threshold, "Minimum accepted chi-square p-value");
  compare->add_option("--analytic-K", cfg.analytic_k,
                      "Compare against the analytic law for this K instead");

  auto* cond = app.add_subcommand("conductance", "Conductance distribution p(g)");
  add_common(cond, cfg, opts["conductance"]);
  cond->add_option("--weights", cfg.weights,
                   "Occupation weights of the N-K channels (comma separated)")
      ->delimiter(',');

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  auto& mine = opts[cfg.command];
  cfg.r_given = mine["R"]->count() > 0;
  cfg.draws_given = mine["draws"]->count() > 0;
  cfg.format_given = mine["format"]->count() > 0;
  if (cfg.command == "compare" && !cfg.format_given) cfg.format = Format::kJson;

  std::ofstream file;
  if (cfg.out != "-") {
    file.open(cfg.out, std::ios::out | std::ios::trunc);
    if (!file) {
      err << "error: cannot write output file '" << cfg.out << "'\n";
      return kUsage;
    }
  }

  Output result;
  try {
    if (cfg.command == "sample") {
      result = cmd_sample(cfg);
    } else if (cfg.command == "density") {
      result = cmd_density(cfg);
    } else if (cfg.command == "compare") {
      result = cmd_compare(cfg);
    } else {
      result = cmd_conductance(cfg);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }

  std::ostream& sink = cfg.out == "-" ? out : static_cast<std::ostream&>(file);
  sink << render(result, cfg.format);
  sink.flush();
  if (!sink) {
    err << "error: failed writing output to '" << cfg.out << "'\n";
    return kUsage;
  }
  if (result.exit_code == kRejected) {
    err << "rejected: p_value below threshold " << format_number(cfg.threshold) << '\n';
  }
  return result.exit_code;
}

}  // namespace projstat::cli
