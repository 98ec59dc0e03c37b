#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "nacflex/disjoint_sets.hpp"
#include "nacflex/error.hpp"
#include "nacflex/graph.hpp"

namespace nacflex {

enum class Colour : std::uint8_t { Red = 0, Blue = 1 };

constexpr Colour opposite(Colour c) noexcept { return c == Colour::Red ? Colour::Blue : Colour::Red; }

constexpr std::string_view to_string(Colour c) noexcept { return c == Colour::Red ? "red" : "blue"; }

// Total red/blue assignment on the edges of a graph. Holds a non-owning
// reference; the graph must outlive the colouring.
class EdgeColouring {
 public:
  explicit EdgeColouring(const Graph& g, Colour fill = Colour::Blue)
      : graph_(g), colour_(g.edge_count(), fill) {}

  EdgeColouring(const Graph& g, std::vector<Colour> colours) : graph_(g), colour_(std::move(colours)) {
    require(colour_.size() == g.edge_count(), ErrorKind::InvalidArgument, "colour vector length differs from edge count");
  }

  template <class Pred>
  static EdgeColouring red_where(const Graph& g, Pred&& is_red) {
    EdgeColouring c(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (is_red(e)) c.colour_[e] = Colour::Red;
    return c;
  }

  static EdgeColouring from_red_edges(const Graph& g, const std::vector<Edge>& red) {
    EdgeColouring c(g);
    for (const Edge& e : red) {
      auto id = g.edge_index(e.u, e.v);
      if (!id) fail(ErrorKind::InvalidArgument, "red edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not in graph");
      c.colour_[*id] = Colour::Red;
    }
    return c;
  }

  const Graph& graph() const noexcept { return graph_.get(); }
  Colour operator[](EdgeId e) const { return colour_[e]; }
  void set(EdgeId e, Colour c) { colour_[e] = c; }
  const std::vector<Colour>& colours() const noexcept { return colour_; }

  std::size_t count(Colour c) const { return static_cast<std::size_t>(std::count(colour_.begin(), colour_.end(), c)); }
  bool surjective() const { return count(Colour::Red) > 0 && count(Colour::Blue) > 0; }

  EdgeColouring swapped() const {
    EdgeColouring out = *this;
    for (auto& c : out.colour_) c = opposite(c);
    return out;
  }

  std::vector<Edge> edges_of(Colour c) const {
    std::vector<Edge> out;
    for (EdgeId e = 0; e < colour_.size(); ++e)
      if (colour_[e] == c) out.push_back(graph().edge(e));
    return out;
  }

  friend bool operator==(const EdgeColouring& a, const EdgeColouring& b) { return a.colour_ == b.colour_; }
  friend bool operator<(const EdgeColouring& a, const EdgeColouring& b) { return a.colour_ < b.colour_; }

 private:
  std::reference_wrapper<const Graph> graph_;
  std::vector<Colour> colour_;
};

// Components of the spanning subgraph formed by the edges of one colour.
// Vertices meeting no such edge are singleton components.
inline ComponentLabelling monochromatic_components(const EdgeColouring& c, Colour colour) {
  return components_of_edges(c.graph(), [&](EdgeId e) { return c[e] == colour; });
}

// A cycle with exactly one edge of its colour: `edge` plus a path of the
// other colour joining its endpoints.
struct AlmostMonochromaticCycle {
  EdgeId edge = 0;
  Colour edge_colour = Colour::Red;
  std::vector<EdgeId> path;          // from edge.u to edge.v
  std::vector<Vertex> path_vertices;  // edge.u ... edge.v
};

enum class NacFailure { None, NotSurjective, AlmostMonochromaticCycle };

struct NacVerdict {
  bool is_nac = false;
  NacFailure failure = NacFailure::None;
  std::optional<AlmostMonochromaticCycle> cycle;
};

namespace detail {

// Shortest path from `from` to `to` using only edges of `colour`.
inline std::optional<std::pair<std::vector<EdgeId>, std::vector<Vertex>>> monochromatic_path(
    const EdgeColouring& c, Colour colour, Vertex from, Vertex to) {
  const Graph& g = c.graph();
  std::vector<EdgeId> via(g.vertex_count(), UINT32_MAX);
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> queue{from};
  seen[from] = true;
  for (std::size_t head = 0; head < queue.size() && !seen[to]; ++head) {
    const Vertex v = queue[head];
    auto nb = g.neighbours(v);
    auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (seen[nb[i]] || c[inc[i]] != colour) continue;
      seen[nb[i]] = true;
      via[nb[i]] = inc[i];
      queue.push_back(nb[i]);
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<EdgeId> edges;
  std::vector<Vertex> verts{to};
  for (Vertex v = to; v != from;) {
    const EdgeId e = via[v];
    edges.push_back(e);
    v = g.edge(e).other(v);
    verts.push_back(v);
  }
  std::reverse(edges.begin(), edges.end());
  std::reverse(verts.begin(), verts.end());
  return std::make_pair(std::move(edges), std::move(verts));
}

}  // namespace detail

// A colouring is NAC iff it is surjective and no edge has both endpoints in
// one monochromatic component of the other colour. An edge whose endpoints
// are joined by a path of the other colour closes exactly the cycles
// forbidden by the definition, so the check is two union-find passes.
inline NacVerdict nac_check(const EdgeColouring& c) {
  const Graph& g = c.graph();
  NacVerdict verdict;
  if (!c.surjective()) {
    verdict.failure = NacFailure::NotSurjective;
    return verdict;
  }
  DisjointSets red(g.vertex_count()), blue(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    (c[e] == Colour::Red ? red : blue).unite(ed.u, ed.v);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    DisjointSets& other = c[e] == Colour::Red ? blue : red;
    if (!other.same(ed.u, ed.v)) continue;
    auto path = detail::monochromatic_path(c, opposite(c[e]), ed.u, ed.v);
    if (!path) fail(ErrorKind::Internal, "union-find and path search disagree");
    verdict.failure = NacFailure::AlmostMonochromaticCycle;
    verdict.cycle = AlmostMonochromaticCycle{e, c[e], std::move(path->first), std::move(path->second)};
    return verdict;
  }
  verdict.is_nac = true;
  return verdict;
}

inline bool is_nac(const EdgeColouring& c) { return nac_check(c).is_nac; }

}  // namespace nacflex
