#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "prismcurv/contact_stream.hpp"

namespace prismcurv {

using Slice = std::int64_t;

/// A node copy at one time slice, ordered by (node, slice).
struct SpacetimeVertex {
  NodeId node = 0;
  Slice slice = 0;

  friend auto operator<=>(const SpacetimeVertex&, const SpacetimeVertex&) = default;
};

/// Canonical simplex: strictly increasing, non-empty vertex list.
class Simplex {
 public:
  Simplex() = default;

  /// Sorts `vertices`; throws DomainError if empty or if a vertex repeats.
  explicit Simplex(std::vector<SpacetimeVertex> vertices);
  Simplex(std::initializer_list<SpacetimeVertex> vertices)
      : Simplex(std::vector<SpacetimeVertex>(vertices)) {}

  /// Trusts the caller that `vertices` is already canonical.
  static Simplex from_sorted(std::vector<SpacetimeVertex> vertices);

  int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::span<const SpacetimeVertex> vertices() const noexcept { return vertices_; }
  const SpacetimeVertex& operator[](std::size_t k) const { return vertices_[k]; }

  bool contains(const SpacetimeVertex& v) const;
  /// Codimension-1 face obtained by dropping vertex `k`.
  Simplex without(std::size_t k) const;
  /// Node ids in vertex order.
  std::vector<NodeId> nodes() const;

  std::string to_string() const;

  friend auto operator<=>(const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.vertices_ <=> b.vertices_;
  }
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  std::vector<SpacetimeVertex> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// Shorthand used throughout the tests: vertex at slice 0.
inline SpacetimeVertex at0(NodeId node) { return {node, 0}; }

}  // namespace prismcurv
