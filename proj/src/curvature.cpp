#include "prismcurv/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "prismcurv/errors.hpp"
#include "prismcurv/format.hpp"

namespace prismcurv {

namespace {

std::vector<SimplexId> common(std::span<const SimplexId> a, std::span<const SimplexId> b) {
  std::vector<SimplexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void require_edge(const WeightedComplex& complex, SimplexId edge) {
  if (complex.dim(edge) != 1) throw DomainError("expected a 1-simplex");
}

bool touches_other_slice(const Simplex& s, Slice slice) {
  return std::any_of(s.vertices().begin(), s.vertices().end(),
                     [slice](const SpacetimeVertex& v) { return v.slice != slice; });
}

// w(e) Σ_T w(e)/w(T) + Σ_v w(v), the part both curvatures share.
double trivial_terms(const WeightedComplex& complex, SimplexId edge) {
  const double we = complex.weight(edge);
  double sum = 0;
  for (SimplexId tri : complex.cofaces(edge)) sum += we / complex.weight(tri);
  for (SimplexId v : complex.faces(edge)) sum += complex.weight(v) / we;
  return sum;
}

}  // namespace

double forman_general(const WeightedComplex& complex, SimplexId cell) {
  const double wa = complex.weight(cell);
  double cofaces = 0;
  for (SimplexId beta : complex.cofaces(cell)) cofaces += wa / complex.weight(beta);
  double faces = 0;
  for (SimplexId gamma : complex.faces(cell)) faces += complex.weight(gamma) / wa;

  double parallel = 0;
  for (SimplexId other : parallels_p(complex, cell)) {
    const double root = std::sqrt(wa * complex.weight(other));
    double up = 0;
    for (SimplexId beta : common(complex.cofaces(cell), complex.cofaces(other))) up += root / complex.weight(beta);
    double down = 0;
    for (SimplexId gamma : common(complex.faces(cell), complex.faces(other))) down += complex.weight(gamma) / root;
    parallel += std::abs(up - down);
  }
  return wa * (cofaces + faces - parallel);
}

double forman_general(const WeightedComplex& complex, const Simplex& cell) {
  return forman_general(complex, complex.at(cell));
}

SimplexId shared_vertex(const WeightedComplex& complex, SimplexId edge, SimplexId parallel) {
  auto shared = common(complex.faces(edge), complex.faces(parallel));
  if (shared.size() != 1) throw DomainError("edges do not share exactly one vertex");
  return shared.front();
}

double forman_orig_1(const WeightedComplex& complex, SimplexId edge) {
  require_edge(complex, edge);
  const double we = complex.weight(edge);
  double parallel = 0;
  for (SimplexId other : parallels_1(complex, edge))
    parallel += complex.weight(shared_vertex(complex, edge, other)) / std::sqrt(we * complex.weight(other));
  return we * (trivial_terms(complex, edge) - parallel);
}

double forman_aug(const WeightedComplex& complex, SimplexId edge) {
  require_edge(complex, edge);
  const double we = complex.weight(edge);
  double parallel = 0;
  for (SimplexId other : parallels_1(complex, edge)) parallel += std::sqrt(we / complex.weight(other));
  return we * (trivial_terms(complex, edge) - parallel);
}

double forman_aug(const WeightedComplex& complex, const Simplex& edge) { return forman_aug(complex, complex.at(edge)); }

double discrepancy_closed_form(const WeightedComplex& complex, SimplexId edge) {
  require_edge(complex, edge);
  const double we = complex.weight(edge);
  double sum = 0;
  for (SimplexId other : parallels_1(complex, edge))
    sum += std::sqrt(we / complex.weight(other)) * (complex.weight(shared_vertex(complex, edge, other)) - we);
  return sum;
}

double discrepancy_bound(const WeightedComplex& complex, SimplexId edge) {
  require_edge(complex, edge);
  const double we = complex.weight(edge);
  double sum = 0;
  for (SimplexId other : parallels_1(complex, edge))
    sum += std::sqrt(we / complex.weight(other)) * std::abs(complex.weight(shared_vertex(complex, edge, other)) - we);
  return sum;
}

CouplingTerms coupling_decomposition(const PrismComplex& pc, SimplexId edge, const WeightedComplex& snapshot) {
  const auto& cx = pc.complex;
  require_edge(cx, edge);
  const auto info = pc.edge(edge);
  if (info.cls != EdgeClass::Spatial) throw DomainError("coupling decomposition is defined for spatial edges only");
  const Simplex& e = cx.simplex(edge);
  const Slice slice = e[0].slice;
  const double we = cx.weight(edge);

  CouplingTerms out;
  out.f_static = forman_general(snapshot, snapshot.at(e));
  double upward = 0;
  for (SimplexId tri : cx.cofaces(edge)) {
    if (!touches_other_slice(cx.simplex(tri), slice)) continue;
    upward += we / cx.weight(tri);
    ++out.prism_cofaces;
  }
  for (SimplexId other : parallels_1(cx, edge)) {
    if (!touches_other_slice(cx.simplex(other), slice)) continue;
    out.omega += cx.weight(shared_vertex(cx, edge, other)) / std::sqrt(we * cx.weight(other));
    ++out.prism_parallels;
  }
  out.delta_prism = we * upward - we * out.omega;
  out.f_full = forman_general(cx, edge);
  return out;
}

CouplingTerms coupling_decomposition(const PrismComplex& pc, SimplexId edge) {
  const Slice slice = pc.complex.simplex(edge)[0].slice;
  return coupling_decomposition(pc, edge, weighted_snapshot(pc, slice));
}

double alternating_sum(const WeightedComplex& complex) {
  double total = 0;
  for (int d = 0; d <= complex.top_dim(); ++d) {
    double layer = 0;
    for (SimplexId id : complex.ids(d)) layer += forman_general(complex, id);
    total += (d % 2 == 0) ? layer : -layer;
  }
  return total;
}

std::vector<CurvatureRecord> curvature_records(const PrismComplex& pc) {
  const auto& cx = pc.complex;
  std::vector<CurvatureRecord> out;
  out.reserve(cx.count(1));
  for (SimplexId id : cx.ids(1)) {
    CurvatureRecord r;
    r.edge = id;
    r.u = cx.simplex(id)[0];
    r.v = cx.simplex(id)[1];
    const auto info = pc.edge(id);
    r.cls = info.cls;
    r.dt = info.gap;
    r.w = cx.weight(id);
    r.F = forman_general(cx, id);
    r.F_aug = forman_aug(cx, id);
    r.diff = r.F - r.F_aug;
    r.predicted_abs_diff = std::abs(discrepancy_closed_form(cx, id));
    r.n_tri = cx.cofaces(id).size();
    r.n_par = parallels_1(cx, id).size();
    out.push_back(r);
  }
  return out;
}

std::string curvature_csv(const std::vector<CurvatureRecord>& records) {
  std::ostringstream out;
  out << "edge_id,u_node,u_slice,v_node,v_slice,class,dt,w,F,F_aug,diff,pred_abs_diff,n_tri,n_par\n";
  for (const auto& r : records) {
    out << r.edge << ',' << r.u.node << ',' << r.u.slice << ',' << r.v.node << ',' << r.v.slice << ','
        << edge_class_name(r.cls) << ',' << r.dt << ',' << format_double(r.w) << ',' << format_double(r.F) << ','
        << format_double(r.F_aug) << ',' << format_double(r.diff) << ',' << format_double(r.predicted_abs_diff)
        << ',' << r.n_tri << ',' << r.n_par << '\n';
  }
  return out.str();
}

}  // namespace prismcurv
