#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <ranges>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "prismcurv/simplex.hpp"

namespace prismcurv {

using SimplexId = std::uint32_t;

/// Immutable weighted simplicial complex.
///
/// Simplices get dense ids ordered by (dimension, vertex list), so iteration
/// order is deterministic and the ids of one dimension form a contiguous
/// range. Each simplex stores its codimension-1 faces and cofaces.
class ComplexBuilder;

class WeightedComplex {
 public:
  WeightedComplex() = default;

  /// Closes `simplices` under faces. All weights start at 1.
  static WeightedComplex from_simplices(const std::vector<Simplex>& simplices);

  std::size_t size() const noexcept { return simplices_.size(); }
  bool empty() const noexcept { return simplices_.empty(); }
  /// Highest dimension present, -1 when empty.
  int top_dim() const noexcept { return static_cast<int>(dim_offsets_.size()) - 2; }
  std::size_t count(int dim) const;
  /// Ids of all simplices of dimension `dim`.
  auto ids(int dim) const {
    if (dim < 0 || dim > top_dim()) return std::views::iota(SimplexId{0}, SimplexId{0});
    return std::views::iota(dim_offsets_[static_cast<std::size_t>(dim)],
                            dim_offsets_[static_cast<std::size_t>(dim) + 1]);
  }
  auto all_ids() const { return std::views::iota(SimplexId{0}, static_cast<SimplexId>(size())); }

  const Simplex& simplex(SimplexId id) const { return simplices_.at(id); }
  int dim(SimplexId id) const { return simplices_.at(id).dim(); }
  double weight(SimplexId id) const { return weights_.at(id); }
  const std::vector<double>& weights() const noexcept { return weights_; }
  std::span<const SimplexId> faces(SimplexId id) const { return faces_.at(id); }
  std::span<const SimplexId> cofaces(SimplexId id) const { return cofaces_.at(id); }

  std::optional<SimplexId> find(const Simplex& s) const;
  bool contains(const Simplex& s) const { return find(s).has_value(); }
  /// Throws LookupError when `s` is absent.
  SimplexId at(const Simplex& s) const;

  /// Same complex with new weights; every weight must be positive.
  WeightedComplex with_weights(std::vector<double> weights) const;
  WeightedComplex with_unit_weights() const;
  WeightedComplex scaled(double factor) const;

  /// Simplex counts by dimension.
  std::vector<std::size_t> f_vector() const;

 private:
  friend class ComplexBuilder;
  std::vector<Simplex> simplices_;
  std::vector<double> weights_;
  std::vector<std::vector<SimplexId>> faces_;
  std::vector<std::vector<SimplexId>> cofaces_;
  std::vector<SimplexId> dim_offsets_;
  std::unordered_map<Simplex, SimplexId, SimplexHash> index_;
};

/// Accumulates simplices together with all of their faces.
class ComplexBuilder {
 public:
  void add(const Simplex& s);
  void add_all(const WeightedComplex& complex);
  std::size_t size() const noexcept { return simplices_.size(); }
  WeightedComplex build() const;
  std::vector<Simplex> simplices() const { return {simplices_.begin(), simplices_.end()}; }

 private:
  std::unordered_set<Simplex, SimplexHash> simplices_;
};

/// Maximal cliques of an undirected graph given as sorted adjacency lists,
/// by Bron–Kerbosch with Tomita pivoting. Each clique is sorted; the list
/// is sorted lexicographically.
std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<int>>& adjacency);

using VertexPair = std::pair<SpacetimeVertex, SpacetimeVertex>;

/// Clique complex of the graph with the given edges. With `max_dim` set,
/// only simplices of dimension <= max_dim are kept.
WeightedComplex flag_complex(std::span<const VertexPair> edges, std::optional<int> max_dim = std::nullopt);

/// Flag complex of node-pair edges placed at one slice.
WeightedComplex flag_complex_at(std::span<const std::pair<NodeId, NodeId>> edges, Slice slice,
                                std::optional<int> max_dim = std::nullopt);

/// Edges sharing exactly one vertex with `edge` and no 2-simplex.
std::vector<SimplexId> parallels_1(const WeightedComplex& complex, SimplexId edge);
std::vector<SimplexId> parallels_1(const WeightedComplex& complex, const Simplex& edge);

/// Same-dimension cells for which exactly one of "common codim-1 coface"
/// and "common codim-1 face" holds. Vertices have no codim-1 faces.
std::vector<SimplexId> parallels_p(const WeightedComplex& complex, SimplexId cell);
std::vector<SimplexId> parallels_p(const WeightedComplex& complex, const Simplex& cell);

/// Sum over p of (-1)^p times the number of p-simplices.
std::int64_t euler_characteristic(const WeightedComplex& complex);
std::int64_t euler_characteristic(std::span<const Simplex> simplices);
std::int64_t euler_characteristic_of_ids(const WeightedComplex& complex, std::span<const SimplexId> ids);

/// Simplices of `a` whose node sets also occur in `b`, embedded at the
/// slices of `a`.
WeightedComplex persistent_complex(const WeightedComplex& a, const WeightedComplex& b);

/// Debug dump: one simplex per line, `dim  v0 v1 ...  weight`, vertices as
/// `node:slice`.
void write_complex(std::ostream& out, const WeightedComplex& complex);

}  // namespace prismcurv
