#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prismcurv/complex.hpp"
#include "prismcurv/contact_stream.hpp"

namespace prismcurv {

enum class EdgeClass { Spatial, Temporal, Diagonal };

const char* edge_class_name(EdgeClass c);

/// Monotone-decreasing temporal weight g(Δt).
struct GapWeight {
  enum class Kind { Unit, Reciprocal, Exponential };
  Kind kind = Kind::Reciprocal;
  double lambda = 1.0;

  double operator()(double gap) const;

  /// Accepts `unit`, `reciprocal` or `exp:LAMBDA`.
  static GapWeight parse(const std::string& text);
  std::string to_string() const;
};

struct WeightConfig {
  GapWeight g{};
  double diagonal_factor = 0.5;

  void validate() const;
  /// g ≡ 1 and no diagonal attenuation: every weight becomes 1.
  static WeightConfig unit() { return {GapWeight{GapWeight::Kind::Unit, 1.0}, 1.0}; }
};

struct BuildOptions {
  int slice_gap = 3;
  WeightConfig weights{};
  std::optional<int> max_dim{};
  /// Only pair slices that are adjacent in the active-time list.
  bool consecutive_only = false;
};

/// Flag complex of the contact graph at one slice (unit weights).
struct Snapshot {
  Slice slice = 0;
  WeightedComplex flag;
};

/// All prisms between one slice pair: the persistent simplices (embedded at
/// the lower slice) and the ids of every simplex the prisms produce.
struct PrismStack {
  Slice lower = 0;
  Slice upper = 0;
  std::vector<Simplex> persistent;
  std::vector<SimplexId> ids;
};

struct EdgeInfo {
  EdgeClass cls = EdgeClass::Spatial;
  Slice gap = 0;
};

/// Weighted spatiotemporal prism complex together with the pieces it was
/// assembled from.
struct PrismComplex {
  WeightedComplex complex;
  std::vector<Snapshot> snapshots;
  std::vector<PrismStack> stacks;
  /// Indexed by simplex id; meaningful for 1-simplices only.
  std::vector<EdgeInfo> edge_info;
  int slice_gap = 1;
  WeightConfig weights{};

  const Snapshot* snapshot_at(Slice slice) const;
  EdgeInfo edge(SimplexId id) const;
  PrismComplex with_unit_weights() const;
};

/// Class and slice gap of a 1-simplex from its endpoints alone.
EdgeInfo classify_edge(const Simplex& edge);
/// Same, after checking membership in `pc`.
EdgeInfo classify_edge(const PrismComplex& pc, const Simplex& edge);

/// Top simplices S_0..S_n of the prism over `sigma` (nodes in ascending
/// order) between slices t < t2.
std::vector<Simplex> prism_top_simplices(std::vector<NodeId> sigma, Slice t, Slice t2);
/// All faces of the prism's top simplices.
WeightedComplex prism(std::vector<NodeId> sigma, Slice t, Slice t2);

/// Builds the prism complex of a binned contact sequence.
PrismComplex build_kst(const ContactSequence& seq, const BuildOptions& options = {});

/// Geometric mean of positive values.
double geometric_mean(std::span<const double> values);

/// Vertices and spatial edges get 1, temporal edges g(Δt), diagonal edges
/// diagonal_factor * g(Δt), higher simplices the geometric mean of their
/// edge weights.
PrismComplex assign_weights(const PrismComplex& pc, const WeightConfig& cfg);

/// Snapshot at `slice` carrying the weights its simplices have in `pc`.
WeightedComplex weighted_snapshot(const PrismComplex& pc, Slice slice);

}  // namespace prismcurv
