#pragma once

#include <cstdint>
#include <vector>

#include "nacflex/colouring.hpp"
#include "nacflex/error.hpp"
#include "nacflex/graph.hpp"

namespace nacflex {

// Literal cycle-definition check: enumerate every simple cycle and reject the
// colouring if one has exactly one red or exactly one blue edge. Exponential;
// intended as a test oracle for small graphs. Throws InstanceTooLarge once
// more than cycle_budget cycles have been visited.
inline bool nac_check_oracle(const EdgeColouring& c, std::uint64_t cycle_budget = 5'000'000) {
  if (!c.surjective()) return false;
  const Graph& g = c.graph();
  const std::size_t n = g.vertex_count();
  std::vector<bool> on_path(n, false);
  std::vector<Vertex> path;
  std::vector<EdgeId> path_edges;
  std::uint64_t cycles = 0;
  bool bad = false;

  // Each cycle is reported once: rooted at its smallest vertex, and traversed
  // in the direction whose second vertex is smaller than its last.
  auto extend = [&](auto&& self, Vertex root, Vertex v) -> void {
    if (bad) return;
    auto nb = g.neighbours(v);
    auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < nb.size() && !bad; ++i) {
      const Vertex w = nb[i];
      if (w == root && path.size() >= 3 && path[1] < path.back()) {
        if (++cycles > cycle_budget) fail(ErrorKind::InstanceTooLarge, "cycle budget exceeded in oracle");
        std::size_t red = c[inc[i]] == Colour::Red ? 1 : 0;
        for (EdgeId e : path_edges) red += c[e] == Colour::Red ? 1 : 0;
        const std::size_t len = path_edges.size() + 1;
        if (red == 1 || red + 1 == len) bad = true;
        continue;
      }
      if (w <= root || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      path_edges.push_back(inc[i]);
      self(self, root, w);
      path_edges.pop_back();
      path.pop_back();
      on_path[w] = false;
    }
  };

  for (Vertex root = 0; root < n && !bad; ++root) {
    on_path[root] = true;
    path.assign(1, root);
    path_edges.clear();
    extend(extend, root, root);
    on_path[root] = false;
  }
  return !bad;
}

}  // namespace nacflex
