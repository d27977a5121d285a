// Copyright 2026 The lpn Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file scenarios.hpp
 * @brief Scenario runners behind the `lpn` tool, and their CSV/JSON output.
 *
 *   chi       entanglement of one particle spread over three single-mode parties
 *   phi-scan  eps_T and eps_G of the three-fermion |Phi(alpha, beta)> family
 *   walk      eps_T along a three-particle quantum walk on the open chain
 *   snapshot  density, pair correlations and distance distribution at one tau
 *
 * Output is a pure function of the configuration: scans fan out over worker
 * threads but rows are always emitted in grid order.
 */

#pragma once

#include <lpn/dynamics.hpp>
#include <lpn/entanglement.hpp>
#include <lpn/observables.hpp>
#include <lpn/states.hpp>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <exception>
#include <initializer_list>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace lpn {

/// Invalid user configuration. The CLI maps it to exit status 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Scenario { Chi, PhiScan, Walk, Snapshot };
enum class OutputFormat { Csv, Json };

struct RunConfig {
  Scenario scenario = Scenario::Chi;
  Statistics stats = Statistics::Fermions;
  std::string partition;  ///< empty selects the scenario default
  std::size_t modes = 6;
  int particles = 3;
  double onsite = 0.0;
  double tunneling = 1.0;
  double tau_max = 20.0;
  std::size_t steps = 400;  ///< walk: intervals on [0, tau_max]
  double tau = 8.7;
  std::size_t alpha_steps = 101;  ///< phi-scan: grid points on [0, pi]
  std::size_t beta_steps = 101;
  OutputFormat format = OutputFormat::Csv;
  unsigned threads = 0;  ///< 0 uses the hardware concurrency

  LatticeParams lattice() const { return {modes, onsite, tunneling}; }

  std::string partition_or_default() const {
    if (!partition.empty()) return partition;
    return scenario == Scenario::Chi ? "1|2|3" : "1,2|3,4|5,6";
  }

  /// Partition for this run; malformed specs raise ConfigError.
  Partition resolved_partition(std::size_t lattice_modes) const {
    try {
      return Partition::parse(partition_or_default(), lattice_modes);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }

  void validate() const {
    if (!std::isfinite(onsite)) throw ConfigError("--onsite must be finite");
    if (!std::isfinite(tunneling) || tunneling == 0.0) throw ConfigError("tunneling must be nonzero");
    switch (scenario) {
      case Scenario::Chi:
        resolved_partition(3);
        break;
      case Scenario::PhiScan:
        if (alpha_steps < 2 || beta_steps < 2)
          throw ConfigError("phi-scan needs at least 2 grid points per axis");
        resolved_partition(6);
        break;
      case Scenario::Walk:
        if (steps < 1) throw ConfigError("--steps must be at least 1");
        if (!std::isfinite(tau_max) || tau_max < 0.0) throw ConfigError("--tau-max must be finite and >= 0");
        if (particles < 0 || static_cast<std::size_t>(particles) > modes)
          throw ConfigError("walk places one particle per site; too many particles");
        resolved_partition(modes);
        break;
      case Scenario::Snapshot:
        if (!std::isfinite(tau)) throw ConfigError("--tau must be finite");
        if (particles < 0 || static_cast<std::size_t>(particles) > modes)
          throw ConfigError("snapshot places one particle per site; too many particles");
        break;
    }
  }
};

/// Evaluates fn(0..count-1) on worker threads; results keep index order.
template <class Fn>
auto parallel_map(std::size_t count, Fn&& fn, unsigned threads = 0)
    -> std::vector<decltype(fn(std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}));
  std::vector<Result> out(count);
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

struct ChiReport {
  double eps_G = 0.0;
  double eps_T = 0.0;
};

struct PhiRow {
  double alpha = 0.0;
  double beta = 0.0;
  double eps_T = 0.0;
  double eps_G = 0.0;
};

struct WalkRow {
  double tau = 0.0;
  double p111 = 0.0;
  std::array<double, kParties> negativity{};
  double tpn = 0.0;
  double eps_T = 0.0;
};

struct Snapshot {
  double tau = 0.0;
  Statistics stats = Statistics::Fermions;
  DensityProfile density;
  CorrelationMatrix correlation;
  std::vector<double> distance;
};

inline ChiReport run_chi(const RunConfig& config) {
  config.validate();
  const auto part = config.resolved_partition(3);
  const auto chi = states::single_particle_w(config.stats);
  return {geometric_measure(chi, part), entanglement_of_particles(chi, part).eps_T};
}

/// grid point k of n evenly spaced on [0, pi]
inline double angle_grid(std::size_t k, std::size_t n) {
  return std::numbers::pi * static_cast<double>(k) / static_cast<double>(n - 1);
}

inline std::vector<PhiRow> run_phi_scan(const RunConfig& config) {
  config.validate();
  const auto part = config.resolved_partition(6);
  const std::size_t nb = config.beta_steps;
  return parallel_map(
      config.alpha_steps * nb,
      [&](std::size_t k) {
        PhiRow row{angle_grid(k / nb, config.alpha_steps), angle_grid(k % nb, nb), 0.0, 0.0};
        const auto state = states::phi(row.alpha, row.beta);
        row.eps_T = entanglement_of_particles(state, part).eps_T;
        row.eps_G = geometric_measure(state, part);
        return row;
      },
      config.threads);
}

inline std::vector<WalkRow> run_walk(const RunConfig& config) {
  config.validate();
  const auto part = config.resolved_partition(config.modes);
  const auto init = states::packed_left(config.particles, config.modes, config.stats);
  const auto params = config.lattice();
  const Counts one_each{1, 1, 1};
  return parallel_map(
      config.steps + 1,
      [&](std::size_t k) {
        WalkRow row;
        row.tau = config.tau_max * static_cast<double>(k) / static_cast<double>(config.steps);
        const auto report = entanglement_of_particles(evolve_state(init, params, row.tau), part);
        row.eps_T = report.eps_T;
        if (const auto* s = report.find(one_each)) {
          row.p111 = s->prob;
          row.negativity = s->negativity;
          row.tpn = s->tpn;
        }
        return row;
      },
      config.threads);
}

inline Snapshot run_snapshot(const RunConfig& config) {
  config.validate();
  const auto init = states::packed_left(config.particles, config.modes, config.stats);
  const auto c = single_particle_propagator(config.lattice(), config.tau);
  Snapshot snap{config.tau, config.stats, single_particle_density(c, init.occ),
                two_particle_correlation(c, init.occ, config.stats), {}};
  snap.distance = interparticle_distance(snap.correlation);
  return snap;
}

// ---------------------------------------------------------------------------
// Output

/// Magnitudes below this are printed as 0; the library itself never prunes.
inline constexpr double kOutputPrune = 1e-14;

inline double pruned(double v) { return std::abs(v) < kOutputPrune ? 0.0 : v; }

/// 12 significant digits, the fixed precision of every CSV value.
inline std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", pruned(v));
  return buf;
}

namespace detail {

inline std::string csv_line(std::initializer_list<double> values) {
  std::string line;
  bool first = true;
  for (double v : values) {
    if (!first) line += ',';
    line += format_value(v);
    first = false;
  }
  return line + '\n';
}

inline nlohmann::json to_json(const Eigen::VectorXd& v) {
  auto out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(pruned(v(i)));
  return out;
}

inline nlohmann::json to_json(const std::vector<double>& v) {
  return to_json(Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()))));
}

}  // namespace detail

inline constexpr const char* kPhiHeader = "alpha,beta,eps_T,eps_G";
inline constexpr const char* kWalkHeader = "tau,P_111,N_A-BC,N_B-AC,N_C-AB,TPN,eps_T";
inline constexpr const char* kChiHeader = "eps_G,eps_T";

inline std::string render_csv(const ChiReport& r) {
  return std::string(kChiHeader) + '\n' + detail::csv_line({r.eps_G, r.eps_T});
}

inline std::string render_csv(const std::vector<PhiRow>& rows) {
  std::string out = std::string(kPhiHeader) + '\n';
  for (const auto& r : rows) out += detail::csv_line({r.alpha, r.beta, r.eps_T, r.eps_G});
  return out;
}

inline std::string render_csv(const std::vector<WalkRow>& rows) {
  std::string out = std::string(kWalkHeader) + '\n';
  for (const auto& r : rows)
    out += detail::csv_line({r.tau, r.p111, r.negativity[0], r.negativity[1], r.negativity[2], r.tpn, r.eps_T});
  return out;
}

/// Long form: one row per entry of rho, Gamma and g (1-based indices).
inline std::string render_csv(const Snapshot& s) {
  std::string out = "quantity,r,s,value\n";
  const auto L = s.density.rho.size();
  for (Eigen::Index r = 0; r < L; ++r)
    out += "rho," + std::to_string(r + 1) + ",," + format_value(s.density.rho(r)) + '\n';
  for (Eigen::Index r = 0; r < L; ++r)
    for (Eigen::Index c = 0; c < L; ++c)
      out += "Gamma," + std::to_string(r + 1) + ',' + std::to_string(c + 1) + ',' +
             format_value(s.correlation.gamma(r, c)) + '\n';
  for (std::size_t d = 0; d < s.distance.size(); ++d)
    out += "g," + std::to_string(d) + ",," + format_value(s.distance[d]) + '\n';
  return out;
}

inline nlohmann::json to_json(const ChiReport& r) {
  return {{"eps_G", pruned(r.eps_G)}, {"eps_T", pruned(r.eps_T)}};
}

inline nlohmann::json to_json(const std::vector<PhiRow>& rows) {
  auto out = nlohmann::json::array();
  for (const auto& r : rows)
    out.push_back({{"alpha", r.alpha}, {"beta", r.beta}, {"eps_T", pruned(r.eps_T)}, {"eps_G", pruned(r.eps_G)}});
  return out;
}

inline nlohmann::json to_json(const std::vector<WalkRow>& rows) {
  auto out = nlohmann::json::array();
  for (const auto& r : rows)
    out.push_back({{"tau", r.tau},
                   {"P_111", pruned(r.p111)},
                   {"N_A-BC", pruned(r.negativity[0])},
                   {"N_B-AC", pruned(r.negativity[1])},
                   {"N_C-AB", pruned(r.negativity[2])},
                   {"TPN", pruned(r.tpn)},
                   {"eps_T", pruned(r.eps_T)}});
  return out;
}

inline nlohmann::json to_json(const Snapshot& s) {
  nlohmann::json gamma = nlohmann::json::array();
  for (Eigen::Index r = 0; r < s.correlation.gamma.rows(); ++r)
    gamma.push_back(detail::to_json(Eigen::VectorXd(s.correlation.gamma.row(r).transpose())));
  return {{"tau", s.tau},
          {"stats", to_string(s.stats)},
          {"rho", detail::to_json(s.density.rho)},
          {"Gamma", gamma},
          {"g", detail::to_json(s.distance)}};
}

/// Runs the configured scenario and renders it in the configured format.
inline std::string run(const RunConfig& config) {
  auto emit = [&](const auto& result) {
    return config.format == OutputFormat::Csv ? render_csv(result) : to_json(result).dump(2) + '\n';
  };
  switch (config.scenario) {
    case Scenario::Chi: return emit(run_chi(config));
    case Scenario::PhiScan: return emit(run_phi_scan(config));
    case Scenario::Walk: return emit(run_walk(config));
    case Scenario::Snapshot: return emit(run_snapshot(config));
  }
  throw ConfigError("unknown scenario");
}

}  // namespace lpn
