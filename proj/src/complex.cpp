#include "prismcurv/complex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "prismcurv/errors.hpp"
#include "prismcurv/format.hpp"

namespace prismcurv {

// ---------------------------------------------------------------------------
// WeightedComplex

WeightedComplex WeightedComplex::from_simplices(const std::vector<Simplex>& simplices) {
  ComplexBuilder builder;
  for (const auto& s : simplices) builder.add(s);
  return builder.build();
}

std::size_t WeightedComplex::count(int dim) const {
  if (dim < 0 || dim > top_dim()) return 0;
  const auto d = static_cast<std::size_t>(dim);
  return dim_offsets_[d + 1] - dim_offsets_[d];
}

std::optional<SimplexId> WeightedComplex::find(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SimplexId WeightedComplex::at(const Simplex& s) const {
  auto id = find(s);
  if (!id) throw LookupError("simplex " + s.to_string() + " is not in the complex");
  return *id;
}

WeightedComplex WeightedComplex::with_weights(std::vector<double> weights) const {
  if (weights.size() != size()) throw DomainError("weight vector size does not match the complex");
  for (double w : weights)
    if (!(w > 0) || !std::isfinite(w)) throw DomainError("simplex weights must be positive and finite");
  WeightedComplex out = *this;
  out.weights_ = std::move(weights);
  return out;
}

WeightedComplex WeightedComplex::with_unit_weights() const {
  return with_weights(std::vector<double>(size(), 1.0));
}

WeightedComplex WeightedComplex::scaled(double factor) const {
  std::vector<double> w = weights_;
  for (double& x : w) x *= factor;
  return with_weights(std::move(w));
}

std::vector<std::size_t> WeightedComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (int d = 0; d <= top_dim(); ++d) out.push_back(count(d));
  return out;
}

// ---------------------------------------------------------------------------
// ComplexBuilder

void ComplexBuilder::add(const Simplex& s) {
  if (simplices_.contains(s)) return;
  const std::size_t n = s.size();
  if (n > 24) throw DomainError("simplex too large to close under faces");
  const auto verts = s.vertices();
  std::vector<SpacetimeVertex> face;
  // Every non-empty subset; vertex order is preserved so faces stay sorted.
  for (std::uint32_t mask = (1u << n) - 1; mask > 0; --mask) {
    face.clear();
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (1u << k)) face.push_back(verts[k]);
    simplices_.insert(Simplex::from_sorted(face));
  }
}

void ComplexBuilder::add_all(const WeightedComplex& complex) {
  for (SimplexId id : complex.all_ids()) simplices_.insert(complex.simplex(id));
}

WeightedComplex ComplexBuilder::build() const {
  WeightedComplex out;
  out.simplices_.assign(simplices_.begin(), simplices_.end());
  std::sort(out.simplices_.begin(), out.simplices_.end());

  const std::size_t n = out.simplices_.size();
  out.weights_.assign(n, 1.0);
  out.faces_.assign(n, {});
  out.cofaces_.assign(n, {});
  out.index_.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.index_.emplace(out.simplices_[k], static_cast<SimplexId>(k));

  if (n > 0) {
    const int top = out.simplices_.back().dim();
    out.dim_offsets_.assign(static_cast<std::size_t>(top) + 2, 0);
    for (const auto& s : out.simplices_) ++out.dim_offsets_[static_cast<std::size_t>(s.dim()) + 1];
    for (std::size_t d = 1; d < out.dim_offsets_.size(); ++d) out.dim_offsets_[d] += out.dim_offsets_[d - 1];
  }

  for (std::size_t k = 0; k < n; ++k) {
    const auto& s = out.simplices_[k];
    if (s.dim() == 0) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      const SimplexId face = out.index_.at(s.without(drop));
      out.faces_[k].push_back(face);
      out.cofaces_[face].push_back(static_cast<SimplexId>(k));
    }
  }
  for (auto& f : out.faces_) std::sort(f.begin(), f.end());
  // Cofaces are appended in increasing k, already sorted.
  return out;
}

// ---------------------------------------------------------------------------
// Cliques and flag complexes

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void bron_kerbosch(const std::vector<std::vector<int>>& adj, std::vector<int>& clique, std::vector<int> candidates,
                   std::vector<int> excluded, std::vector<std::vector<int>>& out) {
  if (candidates.empty()) {
    if (excluded.empty()) {
      auto c = clique;
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    return;
  }
  // Pivot: vertex of P ∪ X with the most neighbours in P.
  int pivot = -1;
  std::size_t best = 0;
  for (const auto* set : {&candidates, &excluded}) {
    for (int u : *set) {
      const std::size_t k = intersect_sorted(adj[static_cast<std::size_t>(u)], candidates).size();
      if (pivot < 0 || k > best) {
        pivot = u;
        best = k;
      }
    }
  }
  std::vector<int> branch;
  std::set_difference(candidates.begin(), candidates.end(), adj[static_cast<std::size_t>(pivot)].begin(),
                      adj[static_cast<std::size_t>(pivot)].end(), std::back_inserter(branch));
  for (int v : branch) {
    const auto& nv = adj[static_cast<std::size_t>(v)];
    clique.push_back(v);
    bron_kerbosch(adj, clique, intersect_sorted(candidates, nv), intersect_sorted(excluded, nv), out);
    clique.pop_back();
    candidates.erase(std::lower_bound(candidates.begin(), candidates.end(), v));
    excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
  }
}

void add_subsets_up_to(ComplexBuilder& builder, const std::vector<SpacetimeVertex>& clique, std::size_t max_size) {
  // Combinations of size max_size; their faces supply the smaller ones.
  const std::size_t n = clique.size();
  std::vector<std::size_t> pick(max_size);
  for (std::size_t k = 0; k < max_size; ++k) pick[k] = k;
  std::vector<SpacetimeVertex> verts(max_size);
  while (true) {
    for (std::size_t k = 0; k < max_size; ++k) verts[k] = clique[pick[k]];
    builder.add(Simplex::from_sorted(verts));
    std::size_t k = max_size;
    while (k > 0 && pick[k - 1] == n - max_size + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t r = k; r < max_size; ++r) pick[r] = pick[r - 1] + 1;
  }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<int>>& adjacency) {
  std::vector<std::vector<int>> out;
  if (adjacency.empty()) return out;
  std::vector<int> candidates(adjacency.size());
  for (std::size_t k = 0; k < adjacency.size(); ++k) candidates[k] = static_cast<int>(k);
  std::vector<int> clique;
  bron_kerbosch(adjacency, clique, std::move(candidates), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

WeightedComplex flag_complex(std::span<const VertexPair> edges, std::optional<int> max_dim) {
  if (max_dim && *max_dim < 0) throw DomainError("max_dim must be non-negative");
  std::map<SpacetimeVertex, int> local;
  for (const auto& [a, b] : edges) {
    if (a == b) throw DomainError("self-loop edge in flag complex input");
    local.emplace(a, 0);
    local.emplace(b, 0);
  }
  std::vector<SpacetimeVertex> vertex_of;
  for (auto& [v, idx] : local) {
    idx = static_cast<int>(vertex_of.size());
    vertex_of.push_back(v);
  }
  std::vector<std::vector<int>> adj(vertex_of.size());
  for (const auto& [a, b] : edges) {
    adj[static_cast<std::size_t>(local[a])].push_back(local[b]);
    adj[static_cast<std::size_t>(local[b])].push_back(local[a]);
  }
  for (auto& nbrs : adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }

  ComplexBuilder builder;
  const std::size_t cap = max_dim ? static_cast<std::size_t>(*max_dim) + 1 : SIZE_MAX;
  for (const auto& clique : maximal_cliques(adj)) {
    std::vector<SpacetimeVertex> verts;
    for (int k : clique) verts.push_back(vertex_of[static_cast<std::size_t>(k)]);
    if (verts.size() <= cap)
      builder.add(Simplex::from_sorted(verts));
    else
      add_subsets_up_to(builder, verts, cap);
  }
  return builder.build();
}

WeightedComplex flag_complex_at(std::span<const std::pair<NodeId, NodeId>> edges, Slice slice,
                                std::optional<int> max_dim) {
  std::vector<VertexPair> lifted;
  lifted.reserve(edges.size());
  for (const auto& [a, b] : edges) lifted.push_back({{a, slice}, {b, slice}});
  return flag_complex(lifted, max_dim);
}

// ---------------------------------------------------------------------------
// Parallel cells

std::vector<SimplexId> parallels_1(const WeightedComplex& complex, SimplexId edge) {
  if (complex.dim(edge) != 1) throw DomainError("parallels_1 expects a 1-simplex");
  const auto& e = complex.simplex(edge);
  // Third vertices of triangles on e.
  std::vector<SpacetimeVertex> apexes;
  for (SimplexId tri : complex.cofaces(edge))
    for (const auto& v : complex.simplex(tri).vertices())
      if (v != e[0] && v != e[1]) apexes.push_back(v);
  std::sort(apexes.begin(), apexes.end());

  std::vector<SimplexId> out;
  for (SimplexId vertex : complex.faces(edge)) {
    const auto& shared = complex.simplex(vertex)[0];
    for (SimplexId other : complex.cofaces(vertex)) {
      if (other == edge) continue;
      const auto& o = complex.simplex(other);
      const auto& far = (o[0] == shared) ? o[1] : o[0];
      if (!std::binary_search(apexes.begin(), apexes.end(), far)) out.push_back(other);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SimplexId> parallels_1(const WeightedComplex& complex, const Simplex& edge) {
  return parallels_1(complex, complex.at(edge));
}

std::vector<SimplexId> parallels_p(const WeightedComplex& complex, SimplexId cell) {
  std::vector<SimplexId> share_coface;
  for (SimplexId beta : complex.cofaces(cell))
    for (SimplexId other : complex.faces(beta))
      if (other != cell) share_coface.push_back(other);
  std::vector<SimplexId> share_face;
  for (SimplexId gamma : complex.faces(cell))
    for (SimplexId other : complex.cofaces(gamma))
      if (other != cell) share_face.push_back(other);
  for (auto* v : {&share_coface, &share_face}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  std::vector<SimplexId> out;
  std::set_symmetric_difference(share_coface.begin(), share_coface.end(), share_face.begin(), share_face.end(),
                                std::back_inserter(out));
  return out;
}

std::vector<SimplexId> parallels_p(const WeightedComplex& complex, const Simplex& cell) {
  return parallels_p(complex, complex.at(cell));
}

// ---------------------------------------------------------------------------
// Euler characteristic

std::int64_t euler_characteristic(const WeightedComplex& complex) {
  std::int64_t chi = 0;
  for (int d = 0; d <= complex.top_dim(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(complex.count(d));
  return chi;
}

std::int64_t euler_characteristic(std::span<const Simplex> simplices) {
  std::int64_t chi = 0;
  for (const auto& s : simplices) chi += (s.dim() % 2 == 0) ? 1 : -1;
  return chi;
}

std::int64_t euler_characteristic_of_ids(const WeightedComplex& complex, std::span<const SimplexId> ids) {
  std::int64_t chi = 0;
  for (SimplexId id : ids) chi += (complex.dim(id) % 2 == 0) ? 1 : -1;
  return chi;
}

// ---------------------------------------------------------------------------

WeightedComplex persistent_complex(const WeightedComplex& a, const WeightedComplex& b) {
  std::set<std::vector<NodeId>> in_b;
  for (SimplexId id : b.all_ids()) in_b.insert(b.simplex(id).nodes());
  std::vector<Simplex> kept;
  for (SimplexId id : a.all_ids())
    if (in_b.contains(a.simplex(id).nodes())) kept.push_back(a.simplex(id));
  return WeightedComplex::from_simplices(kept);
}

void write_complex(std::ostream& out, const WeightedComplex& complex) {
  for (SimplexId id : complex.all_ids()) {
    const auto& s = complex.simplex(id);
    out << s.dim() << ' ';
    for (const auto& v : s.vertices()) out << ' ' << v.node << ':' << v.slice;
    out << "  " << format_double(complex.weight(id)) << '\n';
  }
}

}  // namespace prismcurv
