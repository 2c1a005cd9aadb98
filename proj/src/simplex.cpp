#include "prismcurv/simplex.hpp"

#include <algorithm>

#include "prismcurv/errors.hpp"

namespace prismcurv {

Simplex::Simplex(std::vector<SpacetimeVertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw DomainError("a simplex needs at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw DomainError("repeated vertex in simplex");
}

Simplex Simplex::from_sorted(std::vector<SpacetimeVertex> vertices) {
  Simplex s;
  s.vertices_ = std::move(vertices);
  return s;
}

bool Simplex::contains(const SpacetimeVertex& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

Simplex Simplex::without(std::size_t k) const {
  std::vector<SpacetimeVertex> out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (i != k) out.push_back(vertices_[i]);
  return from_sorted(std::move(out));
}

std::vector<NodeId> Simplex::nodes() const {
  std::vector<NodeId> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.node);
  return out;
}

std::string Simplex::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out += ", ";
    out += "(" + std::to_string(vertices_[i].node) + "," + std::to_string(vertices_[i].slice) + ")";
  }
  return out + "}";
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ s.size();
  for (const auto& v : s.vertices()) {
    h ^= v.node + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(v.slice) + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace prismcurv
