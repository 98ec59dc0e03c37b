#pragma once

// Brute-force reference implementations for cross-checking. Everything here
// works straight from the definitions and is only meant for small graphs.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "nacflex/nacflex.hpp"

namespace oracle {

using namespace nacflex;

inline std::vector<std::size_t> bfs_component_sizes(const Graph& g, const std::vector<bool>& removed) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> sizes;
  for (Vertex s = 0; s < n; ++s) {
    if (removed[s] || seen[s]) continue;
    std::size_t count = 0;
    std::queue<Vertex> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      ++count;
      for (const Edge& e : g.edges()) {
        if (e.u != v && e.v != v) continue;
        const Vertex w = e.other(v);
        if (!removed[w] && !seen[w]) {
          seen[w] = true;
          q.push(w);
        }
      }
    }
    sizes.push_back(count);
  }
  return sizes;
}

inline bool stable_by_scan(const Graph& g, const std::vector<bool>& in) {
  for (const Edge& e : g.edges())
    if (in[e.u] && in[e.v]) return false;
  return true;
}

inline bool cut_of_kind(const Graph& g, const std::vector<bool>& in, CutKind kind) {
  if (!stable_by_scan(g, in)) return false;
  const auto sizes = bfs_component_sizes(g, in);
  if (sizes.size() < 2) return false;
  switch (kind) {
    case CutKind::Stable: return true;
    case CutKind::Firm: return std::all_of(sizes.begin(), sizes.end(), [](auto s) { return s >= 2; });
    case CutKind::SprimeViolation:
      return sizes.size() >= 3 || (sizes[0] >= 2 && sizes[1] >= 2);
  }
  return false;
}

// Exhaustive search over all 2^n vertex subsets.
inline bool has_cut(const Graph& g, CutKind kind) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> in(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t v = 0; v < n; ++v) in[v] = (mask >> v) & 1;
    if (cut_of_kind(g, in, kind)) return true;
  }
  return false;
}

// All witnesses from the definition, without isolated vertices.
inline std::set<std::pair<int, std::vector<Vertex>>> witnesses(const EdgeColouring& c) {
  const Graph& g = c.graph();
  const std::size_t n = g.vertex_count();
  std::set<std::pair<int, std::vector<Vertex>>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> members;
    bool has_isolated = false;
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v) & 1) {
        members.push_back(v);
        has_isolated |= g.degree(v) == 0;
      }
    if (has_isolated) continue;
    for (Colour side : {Colour::Red, Colour::Blue})
      if (witness_valid(c, StableWitness{side, VertexSet(members)})) out.insert({static_cast<int>(side), members});
  }
  return out;
}

inline bool triangle_through(const Graph& g, Vertex v) {
  const std::size_t n = g.vertex_count();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (a != v && b != v && g.has_edge(v, a) && g.has_edge(v, b) && g.has_edge(a, b)) return true;
  return false;
}

// Every graph on n labelled vertices, by edge mask over the pair order.
template <class F>
void for_each_graph(std::size_t n, F&& f) {
  const std::uint64_t pairs = pair_count(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    std::vector<Edge> edges;
    for (std::uint64_t i = 0; i < pairs; ++i)
      if ((mask >> i) & 1) edges.push_back(pair_from_index(n, i));
    f(Graph(n, std::move(edges)));
  }
}

template <class F>
void for_each_connected_graph(std::size_t n, F&& f) {
  for_each_graph(n, [&](const Graph& g) {
    if (is_connected(g)) f(g);
  });
}

// One representative per isomorphism class: a labelled graph is visited
// only when its edge mask is the smallest over all vertex relabellings.
template <class F>
void for_each_connected_graph_up_to_iso(std::size_t n, F&& f) {
  std::vector<Vertex> perm(n);
  for_each_connected_graph(n, [&](const Graph& g) {
    auto mask_under = [&](const std::vector<Vertex>& p) {
      std::uint64_t m = 0;
      for (const Edge& e : g.edges()) {
        Vertex a = p[e.u], b = p[e.v];
        if (a > b) std::swap(a, b);
        m |= std::uint64_t{1} << (a * (2 * n - a - 1) / 2 + (b - a - 1));
      }
      return m;
    };
    std::iota(perm.begin(), perm.end(), Vertex{0});
    const std::uint64_t own = mask_under(perm);
    while (std::next_permutation(perm.begin(), perm.end()))
      if (mask_under(perm) < own) return;
    f(g);
  });
}

template <class F>
void for_each_colouring(const Graph& g, F&& f) {
  const std::size_t m = g.edge_count();
  std::vector<Colour> colours(m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (std::size_t e = 0; e < m; ++e) colours[e] = ((mask >> e) & 1) ? Colour::Red : Colour::Blue;
    f(EdgeColouring(g, colours));
  }
}

inline std::uint64_t brute_nac_count(const Graph& g) {
  std::uint64_t count = 0;
  for_each_colouring(g, [&](const EdgeColouring& c) { count += nac_check_oracle(c) ? 1 : 0; });
  return count;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (keep(rng)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

inline EdgeColouring random_colouring(std::mt19937_64& rng, const Graph& g) {
  std::vector<Colour> colours(g.edge_count());
  for (auto& c : colours) c = (rng() & 1) ? Colour::Red : Colour::Blue;
  return EdgeColouring(g, std::move(colours));
}

// Hitting times by deciding every prefix in turn with the library's
// decision procedures, for comparison with the binary searches.
struct LinearTimes {
  std::optional<std::uint64_t> conn, T, S, N;
};

inline LinearTimes linear_hitting_times(const ProcessTrace& trace) {
  LinearTimes out;
  NacSearchOptions opts;
  opts.force = true;
  for (std::uint64_t t = 0; t <= trace.length(); ++t) {
    const Graph g = trace.prefix(t);
    const bool connected = is_connected(g);
    if (!out.conn && connected) out.conn = t;
    if (!out.T && g.vertex_count() >= 3 && every_vertex_in_triangle(g).all_covered) out.T = t;
    if (!out.S && out.T && stable_cut_exists(g).none()) out.S = t;
    if (!out.N && out.T && connected && nac_exists(g, opts).none()) out.N = t;
  }
  return out;
}

}  // namespace oracle
