#pragma once

#include <cstddef>
#include <vector>

#include "prismcurv/complex.hpp"
#include "prismcurv/prism.hpp"

namespace prismcurv {

/// Forman–Ricci curvature of any cell, evaluated term by term from the
/// CW-complex definition: coface and face sums minus, for every parallel
/// cell, the absolute difference of its shared-coface and shared-face terms.
double forman_general(const WeightedComplex& complex, SimplexId cell);
double forman_general(const WeightedComplex& complex, const Simplex& cell);

/// The same curvature for a 1-simplex, using the simplicial reduction
///   w(e) [ Σ_T w(e)/w(T) + w(v1)/w(e) + w(v2)/w(e) - Σ_ê w(v(ê)) / sqrt(w(e) w(ê)) ].
double forman_orig_1(const WeightedComplex& complex, SimplexId edge);

/// Augmented curvature
///   w(e) [ w(v1)/w(e) + w(v2)/w(e) + Σ_T w(e)/w(T) - Σ_ê sqrt(w(e)/w(ê)) ].
double forman_aug(const WeightedComplex& complex, SimplexId edge);
double forman_aug(const WeightedComplex& complex, const Simplex& edge);

/// Σ_ê sqrt(w(e)/w(ê)) (w(v(ê)) - w(e)). Literal evaluation gives
/// F - F_aug = -discrepancy_closed_form.
double discrepancy_closed_form(const WeightedComplex& complex, SimplexId edge);

/// Σ_ê sqrt(w(e)/w(ê)) |w(v(ê)) - w(e)|, an upper bound on |F - F_aug|.
double discrepancy_bound(const WeightedComplex& complex, SimplexId edge);

/// The vertex an edge shares with one of its parallels.
SimplexId shared_vertex(const WeightedComplex& complex, SimplexId edge, SimplexId parallel);

/// Split of a spatial edge's curvature into its value inside the snapshot
/// and the correction contributed by prism cells.
struct CouplingTerms {
  double f_static = 0;
  double delta_prism = 0;
  double omega = 0;
  double f_full = 0;
  std::size_t prism_cofaces = 0;
  std::size_t prism_parallels = 0;
};

/// `snapshot` must be the edge's snapshot carrying the weights of `pc`
/// (see weighted_snapshot). Throws DomainError for non-spatial edges.
CouplingTerms coupling_decomposition(const PrismComplex& pc, SimplexId edge, const WeightedComplex& snapshot);
CouplingTerms coupling_decomposition(const PrismComplex& pc, SimplexId edge);

/// Σ_p (-1)^p Σ_{α ∈ K^(p)} F(α).
double alternating_sum(const WeightedComplex& complex);

/// Per-edge curvature row.
struct CurvatureRecord {
  SimplexId edge = 0;
  SpacetimeVertex u{};
  SpacetimeVertex v{};
  EdgeClass cls = EdgeClass::Spatial;
  Slice dt = 0;
  double w = 1;
  double F = 0;
  double F_aug = 0;
  double diff = 0;
  double predicted_abs_diff = 0;
  std::size_t n_tri = 0;
  std::size_t n_par = 0;
};

/// One record per 1-simplex, ordered by edge id.
std::vector<CurvatureRecord> curvature_records(const PrismComplex& pc);

/// CSV with header
/// `edge_id,u_node,u_slice,v_node,v_slice,class,dt,w,F,F_aug,diff,pred_abs_diff,n_tri,n_par`.
std::string curvature_csv(const std::vector<CurvatureRecord>& records);

}  // namespace prismcurv
