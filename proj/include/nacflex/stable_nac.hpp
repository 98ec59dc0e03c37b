#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nacflex/colouring.hpp"
#include "nacflex/error.hpp"
#include "nacflex/graph.hpp"
#include "nacflex/two_sat.hpp"

namespace nacflex {

// s_c is stable, the edges meeting it are exactly the edges coloured `side`.
// Canonical form: no isolated vertices.
struct StableWitness {
  Colour side = Colour::Red;
  VertexSet s_c;

  friend bool operator==(const StableWitness&, const StableWitness&) = default;
};

enum class WitnessMode { First, All };

namespace detail {

struct WitnessProblem {
  std::vector<Vertex> candidates;  // variable index -> vertex
  std::vector<std::uint32_t> var_of;
  std::vector<TwoSat::Literal> units;
  std::vector<std::pair<TwoSat::Literal, TwoSat::Literal>> clauses;
  bool trivially_unsat = false;

  TwoSat solver(const std::vector<TwoSat::Literal>& assumptions = {}) const {
    TwoSat sat(candidates.size());
    for (auto u : units) sat.add_unit(u);
    for (auto [a, b] : clauses) sat.add_clause(a, b);
    for (auto a : assumptions) sat.add_unit(a);
    return sat;
  }

  VertexSet to_set(const std::vector<bool>& value) const {
    std::vector<Vertex> members;
    for (std::uint32_t i = 0; i < value.size(); ++i)
      if (value[i]) members.push_back(candidates[i]);
    return VertexSet(std::move(members));
  }
};

// Variables: candidate vertices (positive degree, every incident edge has
// colour `side`). Every `side` edge needs an endpoint in S; two adjacent
// candidates cannot both be in S. Non-candidates are fixed out of S.
inline WitnessProblem witness_problem(const EdgeColouring& c, Colour side) {
  const Graph& g = c.graph();
  WitnessProblem p;
  p.var_of.assign(g.vertex_count(), UINT32_MAX);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) continue;
    auto inc = g.incident_edges(v);
    if (std::all_of(inc.begin(), inc.end(), [&](EdgeId e) { return c[e] == side; })) {
      p.var_of[v] = static_cast<std::uint32_t>(p.candidates.size());
      p.candidates.push_back(v);
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (c[e] != side) continue;
    const auto [u, v] = g.edge(e);
    const auto xu = p.var_of[u], xv = p.var_of[v];
    if (xu == UINT32_MAX && xv == UINT32_MAX) {
      p.trivially_unsat = true;
    } else if (xu == UINT32_MAX) {
      p.units.push_back(TwoSat::pos(xv));
    } else if (xv == UINT32_MAX) {
      p.units.push_back(TwoSat::pos(xu));
    } else {
      p.clauses.emplace_back(TwoSat::pos(xu), TwoSat::pos(xv));
      p.clauses.emplace_back(TwoSat::neg(xu), TwoSat::neg(xv));
    }
  }
  return p;
}

inline void enumerate_witnesses(const WitnessProblem& p, std::vector<TwoSat::Literal>& assumed, std::size_t cap,
                                std::vector<VertexSet>& out) {
  if (out.size() >= cap) return;
  auto model = p.solver(assumed).solve();
  if (!model) return;
  if (assumed.size() == p.candidates.size()) {
    out.push_back(p.to_set(*model));
    return;
  }
  const auto var = static_cast<std::uint32_t>(assumed.size());
  for (bool value : {true, false}) {
    assumed.push_back(value ? TwoSat::pos(var) : TwoSat::neg(var));
    enumerate_witnesses(p, assumed, cap, out);
    assumed.pop_back();
  }
}

}  // namespace detail

// Stable witnesses of a NAC-colouring, decided per side by 2-SAT. In All
// mode at most size_cap witnesses are returned in total, red side first and
// each side sorted.
inline std::vector<StableWitness> stable_witnesses(const EdgeColouring& c, WitnessMode mode = WitnessMode::First,
                                                   std::size_t size_cap = 4096) {
  require(nac_check(c).is_nac, ErrorKind::NotNac, "stable witnesses need a NAC-colouring");
  std::vector<StableWitness> out;
  for (Colour side : {Colour::Red, Colour::Blue}) {
    const auto problem = detail::witness_problem(c, side);
    if (problem.trivially_unsat) continue;
    if (mode == WitnessMode::First) {
      if (auto model = problem.solver().solve()) out.push_back({side, problem.to_set(*model)});
      continue;
    }
    std::vector<VertexSet> sets;
    std::vector<TwoSat::Literal> assumed;
    detail::enumerate_witnesses(problem, assumed, size_cap - std::min(size_cap, out.size()), sets);
    std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) { return a.members() < b.members(); });
    for (auto& s : sets) out.push_back({side, std::move(s)});
  }
  return out;
}

inline bool is_stable_nac(const EdgeColouring& c) { return !stable_witnesses(c, WitnessMode::First).empty(); }

// Checks a witness directly against the definition.
inline bool witness_valid(const EdgeColouring& c, const StableWitness& w) {
  const Graph& g = c.graph();
  if (!is_stable(g, w.s_c)) return false;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    const bool meets = w.s_c.contains(u) || w.s_c.contains(v);
    if (meets != (c[e] == w.side)) return false;
  }
  return true;
}

// Isolated vertices can join any witness. Pads a canonical witness with the
// lowest isolated vertices up to target size, if enough exist.
inline std::optional<StableWitness> pad_with_isolated(const Graph& g, const StableWitness& w, std::size_t target) {
  if (w.s_c.size() > target) return std::nullopt;
  std::vector<Vertex> members = w.s_c.members();
  for (Vertex v = 0; v < g.vertex_count() && members.size() < target; ++v)
    if (g.degree(v) == 0) members.push_back(v);
  if (members.size() < target) return std::nullopt;
  return StableWitness{w.side, VertexSet(std::move(members))};
}

// Edges meeting s red, others blue. For a bipartite graph and a stable s
// that meets an edge but is not a vertex cover this is a stable NAC-colouring.
inline EdgeColouring bipartite_stable_nac(const Graph& g, const VertexSet& s) {
  s.validate(g);
  require(bipartition(g).bipartite(), ErrorKind::Precondition, "graph is not bipartite");
  require(is_stable(g, s), ErrorKind::Precondition, "vertex set is not stable");
  auto c = EdgeColouring::red_where(g, [&](EdgeId e) { return s.contains(g.edge(e).u) || s.contains(g.edge(e).v); });
  require(c.count(Colour::Red) > 0, ErrorKind::Precondition, "vertex set meets no edge");
  require(c.count(Colour::Blue) > 0, ErrorKind::Precondition, "vertex set is a vertex cover");
  return c;
}

struct MonochromaticCoverStats {
  std::size_t largest = 0;  // vertex count of the largest monochromatic component
  // component size -> number of components, over components with at least
  // one edge of that colour
  std::map<std::size_t, std::size_t> red_histogram;
  std::map<std::size_t, std::size_t> blue_histogram;
};

inline MonochromaticCoverStats monochromatic_cover_stats(const EdgeColouring& c) {
  MonochromaticCoverStats out;
  const Graph& g = c.graph();
  for (Colour colour : {Colour::Red, Colour::Blue}) {
    const auto comps = monochromatic_components(c, colour);
    const auto sizes = comps.sizes();
    std::vector<bool> has_edge(comps.count, false);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (c[e] == colour) has_edge[comps.label[g.edge(e).u]] = true;
    auto& hist = colour == Colour::Red ? out.red_histogram : out.blue_histogram;
    for (std::uint32_t id = 0; id < comps.count; ++id) {
      if (!has_edge[id]) continue;
      ++hist[sizes[id]];
      out.largest = std::max(out.largest, sizes[id]);
    }
  }
  return out;
}

}  // namespace nacflex
