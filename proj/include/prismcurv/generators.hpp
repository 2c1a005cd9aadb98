#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "prismcurv/contact_stream.hpp"

namespace prismcurv {

/// Parameters for the three synthetic contact models. Defaults are the
/// desk-scale experiment: 25 nodes over 50 time units.
struct GeneratorConfig {
  int n_nodes = 25;
  double horizon = 50.0;
  // Erdős–Rényi: per-pair Poisson rate.
  double rate = 0.01;
  // Activity-driven.
  double a_min = 0.05;
  double a_max = 0.5;
  double alpha = 2.5;
  int links_per_activation = 2;
  // Bursty: Weibull inter-event law.
  double weibull_shape = 0.5;
  double weibull_scale = 50.0;
  std::uint64_t seed = 0;

  /// Throws DomainError when a field is out of range.
  void validate() const;
};

/// Deterministic per-stream RNG: the same (seed, stream) always yields the
/// same engine, independent of the order streams are created in.
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream);

/// Uniform in the open interval (0, 1).
double uniform_open(std::mt19937_64& rng);

/// One Weibull(shape, scale) draw by inverse CDF: scale * (-ln u)^(1/shape).
double weibull_draw(std::mt19937_64& rng, double shape, double scale);

/// Truncated power law p(a) ∝ a^-alpha on [a_min, a_max], by inverse CDF.
double truncated_power_law_draw(std::mt19937_64& rng, double a_min, double a_max, double alpha);

/// Homogeneous Poisson contacts per unordered pair on [0, T).
ContactSequence gen_er(int n, double horizon, double rate, std::uint64_t seed);

/// One activation of the activity-driven model.
struct Activation {
  NodeId node = 0;
  std::int64_t step = 0;
  std::vector<NodeId> partners;
};

struct ActivityDrivenSample {
  std::vector<double> activities;
  std::vector<Activation> activations;
  ContactSequence contacts;
};

/// Activity-driven model with full activation log.
ActivityDrivenSample sample_activity_driven(int n, int steps, double a_min, double a_max, double alpha, int m,
                                            std::uint64_t seed);

ContactSequence gen_ad(int n, int steps, double a_min, double a_max, double alpha, int m, std::uint64_t seed);

/// Stationary Weibull renewal process per unordered pair on [0, T).
ContactSequence gen_bursty(int n, double horizon, double shape, double scale, std::uint64_t seed);

enum class Model { ErdosRenyi, ActivityDriven, Bursty };

Model parse_model(const std::string& name);
const char* model_name(Model m);

/// Dispatches on `model` using the matching fields of `cfg`.
ContactSequence generate(Model model, const GeneratorConfig& cfg);

}  // namespace prismcurv
