#pragma once

// Brute-force reference implementations used only by the tests. They work on
// plain vertex lists and never touch the face/coface tables of
// WeightedComplex, so they serve as independent oracles.

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "prismcurv/complex.hpp"

namespace oracle {

using prismcurv::Simplex;
using prismcurv::SpacetimeVertex;
using Cell = std::vector<SpacetimeVertex>;

struct Complex {
  std::map<Cell, double> weight;

  static Complex from(const prismcurv::WeightedComplex& cx) {
    Complex out;
    for (auto id : cx.all_ids()) {
      const auto v = cx.simplex(id).vertices();
      out.weight[Cell(v.begin(), v.end())] = cx.weight(id);
    }
    return out;
  }

  std::vector<Cell> of_dim(std::size_t size) const {
    std::vector<Cell> out;
    for (const auto& [c, w] : weight)
      if (c.size() == size) out.push_back(c);
    return out;
  }
};

inline bool is_subset(const Cell& small, const Cell& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline Cell intersect(const Cell& a, const Cell& b) {
  Cell out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Cell unite(const Cell& a, const Cell& b) {
  Cell out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<Cell> cofaces(const Complex& k, const Cell& a) {
  std::vector<Cell> out;
  for (const auto& c : k.of_dim(a.size() + 1))
    if (is_subset(a, c)) out.push_back(c);
  return out;
}

inline std::vector<Cell> faces(const Complex& k, const Cell& a) {
  std::vector<Cell> out;
  if (a.size() < 2) return out;
  for (const auto& c : k.of_dim(a.size() - 1))
    if (is_subset(c, a)) out.push_back(c);
  return out;
}

/// Parallel cells straight from the XOR definition.
inline std::vector<Cell> parallels(const Complex& k, const Cell& a) {
  std::vector<Cell> out;
  for (const auto& b : k.of_dim(a.size())) {
    if (b == a) continue;
    const Cell u = unite(a, b);
    const bool share_coface = u.size() == a.size() + 1 && k.weight.count(u);
    const Cell i = intersect(a, b);
    const bool share_face = a.size() >= 2 && i.size() == a.size() - 1;
    if (share_coface != share_face) out.push_back(b);
  }
  return out;
}

/// Literal CW-form Forman curvature.
inline double forman(const Complex& k, const Cell& a) {
  const double wa = k.weight.at(a);
  double s = 0;
  for (const auto& b : cofaces(k, a)) s += wa / k.weight.at(b);
  for (const auto& g : faces(k, a)) s += k.weight.at(g) / wa;
  for (const auto& p : parallels(k, a)) {
    const double wp = k.weight.at(p);
    const double root = std::sqrt(wa * wp);
    double up = 0, down = 0;
    const Cell u = unite(a, p);
    if (u.size() == a.size() + 1 && k.weight.count(u)) up += root / k.weight.at(u);
    const Cell i = intersect(a, p);
    if (a.size() >= 2 && i.size() == a.size() - 1) down += k.weight.at(i) / root;
    s -= std::abs(up - down);
  }
  return wa * s;
}

/// Augmented curvature of an edge, written out from its formula.
inline double forman_aug(const Complex& k, const Cell& e) {
  const double we = k.weight.at(e);
  double s = k.weight.at({e[0]}) / we + k.weight.at({e[1]}) / we;
  for (const auto& t : cofaces(k, e)) s += we / k.weight.at(t);
  for (const auto& p : parallels(k, e)) s -= std::sqrt(we / k.weight.at(p));
  return we * s;
}

inline long long euler(const Complex& k) {
  long long chi = 0;
  for (const auto& [c, w] : k.weight) chi += (c.size() % 2 == 1) ? 1 : -1;
  return chi;
}

/// Kolmogorov–Smirnov distance between a sample and a CDF.
template <class Cdf>
double ks_statistic(std::vector<double> xs, Cdf cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double f = cdf(xs[k]);
    d = std::max({d, f - static_cast<double>(k) / n, static_cast<double>(k + 1) / n - f});
  }
  return d;
}

}  // namespace oracle
