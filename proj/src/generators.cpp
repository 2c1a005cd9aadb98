#include "prismcurv/generators.hpp"

#include <algorithm>
#include <cmath>

#include "prismcurv/errors.hpp"

namespace prismcurv {

namespace {

constexpr std::uint64_t kStreamEr = 1ULL << 56;
constexpr std::uint64_t kStreamAd = 2ULL << 56;
constexpr std::uint64_t kStreamBursty = 3ULL << 56;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t pair_stream(int i, int j) {
  return (static_cast<std::uint64_t>(i) << 24) | static_cast<std::uint64_t>(j);
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

void GeneratorConfig::validate() const {
  require(n_nodes >= 2, "n_nodes must be >= 2");
  require(horizon > 0 && std::isfinite(horizon), "horizon must be positive");
  require(rate >= 0 && std::isfinite(rate), "rate must be non-negative");
  require(a_min > 0 && a_min <= a_max && a_max <= 1, "activity bounds must satisfy 0 < a_min <= a_max <= 1");
  require(alpha > 1, "activity exponent must exceed 1");
  require(links_per_activation >= 1 && links_per_activation < n_nodes, "links per activation must lie in [1, n)");
  require(weibull_shape > 0 && weibull_scale > 0, "Weibull shape and scale must be positive");
}

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t state = seed ^ (stream * 0xd1342543de82ef95ULL);
  std::seed_seq seq{splitmix64(state), splitmix64(state), splitmix64(state), splitmix64(state)};
  return std::mt19937_64(seq);
}

double uniform_open(std::mt19937_64& rng) {
  // 53 random bits, shifted half a step off zero.
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

double weibull_draw(std::mt19937_64& rng, double shape, double scale) {
  return scale * std::pow(-std::log(uniform_open(rng)), 1.0 / shape);
}

double truncated_power_law_draw(std::mt19937_64& rng, double a_min, double a_max, double alpha) {
  const double u = uniform_open(rng);
  const double e = 1.0 - alpha;
  const double lo = std::pow(a_min, e);
  const double hi = std::pow(a_max, e);
  const double a = std::pow(lo + u * (hi - lo), 1.0 / e);
  return std::clamp(a, a_min, a_max);
}

ContactSequence gen_er(int n, double horizon, double rate, std::uint64_t seed) {
  require(n >= 2, "n must be >= 2");
  require(horizon >= 0 && std::isfinite(horizon), "horizon must be non-negative");
  require(rate >= 0 && std::isfinite(rate), "rate must be non-negative");
  std::vector<ContactEvent> events;
  if (rate == 0 || horizon == 0) return ContactSequence::from_events(std::move(events));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto rng = make_stream(seed, kStreamEr | pair_stream(i, j));
      double t = 0;
      while (true) {
        t += -std::log(uniform_open(rng)) / rate;
        if (t >= horizon) break;
        events.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j), t});
      }
    }
  }
  return ContactSequence::from_events(std::move(events));
}

ActivityDrivenSample sample_activity_driven(int n, int steps, double a_min, double a_max, double alpha, int m,
                                            std::uint64_t seed) {
  require(n >= 2, "n must be >= 2");
  require(steps >= 0, "step count must be non-negative");
  require(a_min > 0 && a_min <= a_max && a_max <= 1, "activity bounds must satisfy 0 < a_min <= a_max <= 1");
  require(alpha > 1, "activity exponent must exceed 1");
  require(m >= 1, "links per activation must be >= 1");
  require(m < n, "links per activation must be < n");

  ActivityDrivenSample out;
  std::vector<std::mt19937_64> streams;
  streams.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    streams.push_back(make_stream(seed, kStreamAd | static_cast<std::uint64_t>(i)));
    out.activities.push_back(truncated_power_law_draw(streams.back(), a_min, a_max, alpha));
  }

  std::vector<ContactEvent> events;
  std::vector<NodeId> pool;
  for (int step = 0; step < steps; ++step) {
    for (int i = 0; i < n; ++i) {
      auto& rng = streams[static_cast<std::size_t>(i)];
      if (uniform_open(rng) >= out.activities[static_cast<std::size_t>(i)]) continue;
      // Partial Fisher–Yates over V \ {i}.
      pool.clear();
      for (int v = 0; v < n; ++v)
        if (v != i) pool.push_back(static_cast<NodeId>(v));
      Activation act{static_cast<NodeId>(i), step, {}};
      for (int k = 0; k < m; ++k) {
        const auto remaining = static_cast<double>(pool.size() - static_cast<std::size_t>(k));
        const auto pick = static_cast<std::size_t>(k) + static_cast<std::size_t>(uniform_open(rng) * remaining);
        std::swap(pool[static_cast<std::size_t>(k)], pool[std::min(pick, pool.size() - 1)]);
        act.partners.push_back(pool[static_cast<std::size_t>(k)]);
        events.push_back({static_cast<NodeId>(i), pool[static_cast<std::size_t>(k)], static_cast<double>(step)});
      }
      out.activations.push_back(std::move(act));
    }
  }
  out.contacts = ContactSequence::from_events(std::move(events));
  return out;
}

ContactSequence gen_ad(int n, int steps, double a_min, double a_max, double alpha, int m, std::uint64_t seed) {
  return sample_activity_driven(n, steps, a_min, a_max, alpha, m, seed).contacts;
}

ContactSequence gen_bursty(int n, double horizon, double shape, double scale, std::uint64_t seed) {
  require(n >= 2, "n must be >= 2");
  require(horizon >= 0 && std::isfinite(horizon), "horizon must be non-negative");
  require(shape > 0 && std::isfinite(shape), "Weibull shape must be positive");
  require(scale > 0 && std::isfinite(scale), "Weibull scale must be positive");
  std::vector<ContactEvent> events;
  if (horizon == 0) return ContactSequence::from_events(std::move(events));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto rng = make_stream(seed, kStreamBursty | pair_stream(i, j));
      // Equilibrium start: the interval straddling 0 is length-biased, and
      // (L/scale)^shape ~ Gamma(1 + 1/shape).
      std::gamma_distribution<double> gamma(1.0 + 1.0 / shape, 1.0);
      const double straddling = scale * std::pow(gamma(rng), 1.0 / shape);
      double t = uniform_open(rng) * straddling;
      while (t < horizon) {
        events.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j), t});
        t += weibull_draw(rng, shape, scale);
      }
    }
  }
  return ContactSequence::from_events(std::move(events));
}

Model parse_model(const std::string& name) {
  if (name == "er") return Model::ErdosRenyi;
  if (name == "ad") return Model::ActivityDriven;
  if (name == "bursty") return Model::Bursty;
  throw DomainError("unknown model '" + name + "' (expected er, ad or bursty)");
}

const char* model_name(Model m) {
  switch (m) {
    case Model::ErdosRenyi: return "er";
    case Model::ActivityDriven: return "ad";
    case Model::Bursty: return "bursty";
  }
  return "?";
}

ContactSequence generate(Model model, const GeneratorConfig& cfg) {
  cfg.validate();
  switch (model) {
    case Model::ErdosRenyi:
      return gen_er(cfg.n_nodes, cfg.horizon, cfg.rate, cfg.seed);
    case Model::ActivityDriven:
      return gen_ad(cfg.n_nodes, static_cast<int>(std::ceil(cfg.horizon)), cfg.a_min, cfg.a_max, cfg.alpha,
                    cfg.links_per_activation, cfg.seed);
    case Model::Bursty:
      return gen_bursty(cfg.n_nodes, cfg.horizon, cfg.weibull_shape, cfg.weibull_scale, cfg.seed);
  }
  throw DomainError("unknown model");
}

}  // namespace prismcurv
