#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nacflex/disjoint_sets.hpp"
#include "nacflex/error.hpp"

namespace nacflex {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

// Undirected edge stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
// Edges are sorted lexicographically; the position in that order is the
// edge's identity for colourings and processes.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : n_(static_cast<Vertex>(n)), adj_(n), inc_(n) {}

  Graph(std::size_t n, std::vector<Edge> edges) : n_(static_cast<Vertex>(n)), edges_(std::move(edges)) {
    for (const Edge& e : edges_) {
      if (e.u == e.v) fail(ErrorKind::InvalidGraph, "self-loop at vertex " + std::to_string(e.u));
      if (e.v >= n_)
        fail(ErrorKind::InvalidVertex, "edge endpoint " + std::to_string(e.v) + " >= n=" + std::to_string(n_));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
      fail(ErrorKind::InvalidGraph, "duplicate edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
    build_adjacency();
  }

  static Graph from_pairs(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a == b) fail(ErrorKind::InvalidGraph, "self-loop at vertex " + std::to_string(a));
      edges.emplace_back(a, b);
    }
    return Graph(n, std::move(edges));
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
  std::span<const EdgeId> incident_edges(Vertex v) const { return inc_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  std::optional<EdgeId> edge_index(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_ || a == b) return std::nullopt;
    const auto& row = adj_[a];
    auto it = std::lower_bound(row.begin(), row.end(), b);
    if (it == row.end() || *it != b) return std::nullopt;
    return inc_[a][static_cast<std::size_t>(it - row.begin())];
  }

  bool has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

  void check_vertex(Vertex v) const {
    if (v >= n_) fail(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " >= n=" + std::to_string(n_));
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  void build_adjacency() {
    adj_.assign(n_, {});
    inc_.assign(n_, {});
    for (EdgeId id = 0; id < edges_.size(); ++id) {
      adj_[edges_[id].u].push_back(edges_[id].v);
      adj_[edges_[id].v].push_back(edges_[id].u);
    }
    for (Vertex v = 0; v < n_; ++v) {
      auto& row = adj_[v];
      std::sort(row.begin(), row.end());
      inc_[v].resize(row.size());
      for (std::size_t i = 0; i < row.size(); ++i) {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge(v, row[i]));
        inc_[v][i] = static_cast<EdgeId>(it - edges_.begin());
      }
    }
  }

  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<EdgeId>> inc_;
};

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> init) : VertexSet(std::vector<Vertex>(init)) {}
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  const std::vector<Vertex>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  void validate(const Graph& g) const {
    if (!members_.empty()) g.check_vertex(members_.back());
  }

  std::vector<bool> indicator(std::size_t n) const {
    std::vector<bool> in(n, false);
    for (Vertex v : members_) in[v] = true;
    return in;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// Component ids are assigned in increasing order of each component's
// smallest vertex.
struct ComponentLabelling {
  std::vector<std::uint32_t> label;
  std::uint32_t count = 0;

  std::vector<std::vector<Vertex>> groups() const {
    std::vector<std::vector<Vertex>> out(count);
    for (Vertex v = 0; v < label.size(); ++v) out[label[v]].push_back(v);
    return out;
  }

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> out(count, 0);
    for (auto l : label) ++out[l];
    return out;
  }
};

// Labels the components of the subgraph on all n vertices spanned by the
// edges for which keep(edge_id) is true.
template <class KeepEdge>
ComponentLabelling components_of_edges(const Graph& g, KeepEdge&& keep) {
  const std::size_t n = g.vertex_count();
  ComponentLabelling out;
  out.label.assign(n, UINT32_MAX);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (out.label[s] != UINT32_MAX) continue;
    const std::uint32_t id = out.count++;
    out.label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      auto nb = g.neighbours(v);
      auto inc = g.incident_edges(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (out.label[nb[i]] != UINT32_MAX || !keep(inc[i])) continue;
        out.label[nb[i]] = id;
        stack.push_back(nb[i]);
      }
    }
  }
  return out;
}

inline ComponentLabelling components(const Graph& g) {
  return components_of_edges(g, [](EdgeId) { return true; });
}

inline bool is_connected(const Graph& g) { return components(g).count <= 1; }

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;             // new id -> original id
  std::vector<std::optional<Vertex>> from_original;  // original id -> new id
};

// G - S, with vertices relabelled in increasing original order.
inline InducedSubgraph induced_delete(const Graph& g, const VertexSet& s) {
  s.validate(g);
  const std::size_t n = g.vertex_count();
  const auto removed = s.indicator(n);
  InducedSubgraph out;
  out.from_original.assign(n, std::nullopt);
  for (Vertex v = 0; v < n; ++v) {
    if (removed[v]) continue;
    out.from_original[v] = static_cast<Vertex>(out.to_original.size());
    out.to_original.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (!removed[e.u] && !removed[e.v]) edges.emplace_back(*out.from_original[e.u], *out.from_original[e.v]);
  out.graph = Graph(out.to_original.size(), std::move(edges));
  return out;
}

inline bool is_stable(const Graph& g, const VertexSet& s) {
  s.validate(g);
  for (Vertex v : s)
    for (Vertex w : g.neighbours(v))
      if (w > v && s.contains(w)) return false;
  return true;
}

namespace detail {
inline bool sorted_intersect(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return false;
}
}  // namespace detail

inline bool vertex_in_triangle(const Graph& g, Vertex v) {
  for (Vertex u : g.neighbours(v))
    if (detail::sorted_intersect(g.neighbours(v), g.neighbours(u))) return true;
  return false;
}

struct TriangleCoverage {
  bool all_covered = true;
  std::optional<Vertex> uncovered;  // a vertex in no triangle, when not all_covered
};

inline TriangleCoverage every_vertex_in_triangle(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!vertex_in_triangle(g, v)) return {false, v};
  return {};
}

struct Bipartition {
  // side[v] in {0,1} when bipartite; otherwise odd_cycle lists the vertices
  // of an odd cycle in traversal order.
  std::optional<std::vector<std::uint8_t>> side;
  std::vector<Vertex> odd_cycle;

  bool bipartite() const noexcept { return side.has_value(); }
};

inline Bipartition bipartition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint8_t> side(n, 2);
  std::vector<Vertex> parent(n, UINT32_MAX);
  std::vector<std::uint32_t> depth(n, 0);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != 2) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex w : g.neighbours(v)) {
        if (side[w] == 2) {
          side[w] = side[v] ^ 1;
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          // Walk both ends up to their common ancestor.
          std::vector<Vertex> left{v}, right{w};
          Vertex a = v, b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          Bipartition out;
          out.odd_cycle = std::move(left);
          out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
          return out;
        }
      }
    }
  }
  Bipartition out;
  out.side = std::move(side);
  return out;
}

}  // namespace nacflex
