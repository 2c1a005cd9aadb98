#include "prismcurv/prism.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "prismcurv/errors.hpp"
#include "prismcurv/format.hpp"

namespace prismcurv {

const char* edge_class_name(EdgeClass c) {
  switch (c) {
    case EdgeClass::Spatial: return "spatial";
    case EdgeClass::Temporal: return "temporal";
    case EdgeClass::Diagonal: return "diagonal";
  }
  return "?";
}

double GapWeight::operator()(double gap) const {
  switch (kind) {
    case Kind::Unit: return 1.0;
    case Kind::Reciprocal: return 1.0 / (1.0 + gap);
    case Kind::Exponential: return std::exp(-lambda * gap);
  }
  return 1.0;
}

GapWeight GapWeight::parse(const std::string& text) {
  if (text == "unit") return {Kind::Unit, 1.0};
  if (text == "reciprocal") return {Kind::Reciprocal, 1.0};
  if (text.rfind("exp:", 0) == 0) {
    std::size_t used = 0;
    double lambda = 0;
    try {
      lambda = std::stod(text.substr(4), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() - 4 || !(lambda > 0) || !std::isfinite(lambda))
      throw DomainError("exp weight needs a positive rate, e.g. exp:0.5");
    return {Kind::Exponential, lambda};
  }
  throw DomainError("unknown weight function '" + text + "' (unit, reciprocal or exp:LAMBDA)");
}

std::string GapWeight::to_string() const {
  switch (kind) {
    case Kind::Unit: return "unit";
    case Kind::Reciprocal: return "reciprocal";
    case Kind::Exponential: return "exp:" + format_double(lambda);
  }
  return "?";
}

void WeightConfig::validate() const {
  if (!(diagonal_factor > 0 && diagonal_factor <= 1)) throw DomainError("diagonal factor must lie in (0, 1]");
  if (g.kind == GapWeight::Kind::Exponential && !(g.lambda > 0)) throw DomainError("exp rate must be positive");
}

// ---------------------------------------------------------------------------

const Snapshot* PrismComplex::snapshot_at(Slice slice) const {
  auto it = std::lower_bound(snapshots.begin(), snapshots.end(), slice,
                             [](const Snapshot& s, Slice v) { return s.slice < v; });
  if (it == snapshots.end() || it->slice != slice) return nullptr;
  return &*it;
}

EdgeInfo PrismComplex::edge(SimplexId id) const {
  if (complex.dim(id) != 1) throw DomainError("edge info requested for a non-edge");
  return edge_info.at(id);
}

PrismComplex PrismComplex::with_unit_weights() const { return assign_weights(*this, WeightConfig::unit()); }

EdgeInfo classify_edge(const Simplex& edge) {
  if (edge.dim() != 1) throw DomainError("classify_edge expects a 1-simplex");
  const auto& a = edge[0];
  const auto& b = edge[1];
  const Slice gap = a.slice > b.slice ? a.slice - b.slice : b.slice - a.slice;
  if (gap == 0) return {EdgeClass::Spatial, 0};
  if (a.node == b.node) return {EdgeClass::Temporal, gap};
  return {EdgeClass::Diagonal, gap};
}

EdgeInfo classify_edge(const PrismComplex& pc, const Simplex& edge) {
  return pc.edge(pc.complex.at(edge));
}

std::vector<Simplex> prism_top_simplices(std::vector<NodeId> sigma, Slice t, Slice t2) {
  if (!(t < t2)) throw DomainError("prism needs t < t'");
  if (sigma.empty()) throw DomainError("prism over an empty simplex");
  std::sort(sigma.begin(), sigma.end());
  if (std::adjacent_find(sigma.begin(), sigma.end()) != sigma.end()) throw DomainError("repeated node in prism base");
  std::vector<Simplex> tops;
  const std::size_t n = sigma.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<SpacetimeVertex> verts;
    for (std::size_t k = 0; k <= i; ++k) verts.push_back({sigma[k], t});
    for (std::size_t k = i; k < n; ++k) verts.push_back({sigma[k], t2});
    tops.emplace_back(std::move(verts));
  }
  return tops;
}

WeightedComplex prism(std::vector<NodeId> sigma, Slice t, Slice t2) {
  return WeightedComplex::from_simplices(prism_top_simplices(std::move(sigma), t, t2));
}

double geometric_mean(std::span<const double> values) {
  if (values.empty()) throw DomainError("geometric mean of nothing");
  double log_sum = 0;
  for (double v : values) log_sum += std::log(v);
  return std::exp(log_sum / static_cast<double>(values.size()));
}

PrismComplex assign_weights(const PrismComplex& pc, const WeightConfig& cfg) {
  cfg.validate();
  const auto& cx = pc.complex;
  std::vector<double> w(cx.size(), 1.0);
  for (SimplexId id : cx.ids(1)) {
    const auto info = pc.edge_info.at(id);
    const double gap = static_cast<double>(info.gap);
    switch (info.cls) {
      case EdgeClass::Spatial: w[id] = 1.0; break;
      case EdgeClass::Temporal: w[id] = cfg.g(gap); break;
      case EdgeClass::Diagonal: w[id] = cfg.diagonal_factor * cfg.g(gap); break;
    }
  }
  std::vector<double> edge_weights;
  for (int d = 2; d <= cx.top_dim(); ++d) {
    for (SimplexId id : cx.ids(d)) {
      const auto verts = cx.simplex(id).vertices();
      edge_weights.clear();
      for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
          edge_weights.push_back(w[cx.at(Simplex::from_sorted({verts[a], verts[b]}))]);
      w[id] = geometric_mean(edge_weights);
    }
  }
  PrismComplex out = pc;
  out.complex = cx.with_weights(std::move(w));
  out.weights = cfg;
  return out;
}

WeightedComplex weighted_snapshot(const PrismComplex& pc, Slice slice) {
  const Snapshot* snap = pc.snapshot_at(slice);
  if (!snap) throw LookupError("no snapshot at slice " + std::to_string(slice));
  std::vector<double> w;
  w.reserve(snap->flag.size());
  for (SimplexId id : snap->flag.all_ids()) w.push_back(pc.complex.weight(pc.complex.at(snap->flag.simplex(id))));
  return snap->flag.with_weights(std::move(w));
}

PrismComplex build_kst(const ContactSequence& seq, const BuildOptions& options) {
  if (!seq.is_binned()) throw DomainError("contact times are not slice indices; bin the sequence first");
  if (options.slice_gap < 1) throw DomainError("slice gap K must be >= 1");
  options.weights.validate();

  std::map<Slice, std::vector<std::pair<NodeId, NodeId>>> by_slice;
  for (const auto& e : seq.events()) by_slice[ContactSequence::slice_of(e.t)].emplace_back(e.i, e.j);

  PrismComplex pc;
  pc.slice_gap = options.slice_gap;
  for (const auto& [slice, edges] : by_slice) pc.snapshots.push_back({slice, flag_complex_at(edges, slice, options.max_dim)});

  ComplexBuilder all;
  for (const auto& snap : pc.snapshots) all.add_all(snap.flag);

  std::vector<ComplexBuilder> stack_cells;
  const std::size_t m = pc.snapshots.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const Slice lower = pc.snapshots[a].slice;
      const Slice upper = pc.snapshots[b].slice;
      if (upper - lower > options.slice_gap) break;
      if (options.consecutive_only && b != a + 1) break;
      const auto shared = persistent_complex(pc.snapshots[a].flag, pc.snapshots[b].flag);
      if (shared.empty()) continue;
      PrismStack stack{lower, upper, {}, {}};
      ComplexBuilder cells;
      for (SimplexId id : shared.all_ids()) {
        stack.persistent.push_back(shared.simplex(id));
        for (const auto& top : prism_top_simplices(shared.simplex(id).nodes(), lower, upper)) {
          cells.add(top);
          all.add(top);
        }
      }
      pc.stacks.push_back(std::move(stack));
      stack_cells.push_back(std::move(cells));
    }
  }

  WeightedComplex complex = all.build();
  for (std::size_t k = 0; k < pc.stacks.size(); ++k) {
    auto& ids = pc.stacks[k].ids;
    for (const auto& s : stack_cells[k].simplices()) ids.push_back(complex.at(s));
    std::sort(ids.begin(), ids.end());
  }
  pc.edge_info.assign(complex.size(), EdgeInfo{});
  for (SimplexId id : complex.ids(1)) pc.edge_info[id] = classify_edge(complex.simplex(id));
  pc.complex = std::move(complex);
  return assign_weights(pc, options.weights);
}

}  // namespace prismcurv
