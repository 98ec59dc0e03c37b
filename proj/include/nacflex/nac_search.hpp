#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "nacflex/budget.hpp"
#include "nacflex/colouring.hpp"
#include "nacflex/disjoint_sets.hpp"
#include "nacflex/graph.hpp"

namespace nacflex {

// Finest partition of the edges in which the three edges of every triangle
// share a class. Every NAC-colouring is constant on each class.
struct TriangleClasses {
  std::vector<std::uint32_t> class_of;  // edge id -> class id, numbered by first edge
  std::uint32_t count = 0;

  std::vector<std::vector<EdgeId>> members() const {
    std::vector<std::vector<EdgeId>> out(count);
    for (EdgeId e = 0; e < class_of.size(); ++e) out[class_of[e]].push_back(e);
    return out;
  }
};

inline TriangleClasses triangle_classes(const Graph& g) {
  DisjointSets dsu(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    auto nu = g.neighbours(u), nv = g.neighbours(v);
    auto iu = g.incident_edges(u), iv = g.incident_edges(v);
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
      if (nu[i] == nv[j]) {
        dsu.unite(e, iu[i]);
        dsu.unite(e, iv[j]);
        ++i;
        ++j;
      } else if (nu[i] < nv[j]) {
        ++i;
      } else {
        ++j;
      }
    }
  }
  TriangleClasses out;
  out.class_of.assign(g.edge_count(), UINT32_MAX);
  std::vector<std::uint32_t> id_of_root(g.edge_count(), UINT32_MAX);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto root = dsu.find(e);
    if (id_of_root[root] == UINT32_MAX) id_of_root[root] = out.count++;
    out.class_of[e] = id_of_root[root];
  }
  return out;
}

struct NacSearchOptions {
  Budget budget{};
  // Refuse (report budget-exceeded without searching) above this many
  // triangle classes unless force is set.
  std::uint32_t max_classes = 26;
  bool force = false;
};

namespace detail {

// Depth-first search over colourings of the triangle classes. Classes are
// visited largest first; the first class is fixed red. After each
// assignment, unassigned classes having an edge inside a monochromatic
// component are forced to that component's colour, and any assigned edge
// inside a component of the other colour is a conflict.
class NacClassSearch {
 public:
  NacClassSearch(const Graph& g, const TriangleClasses& tc, const Budget& budget)
      : g_(g), meter_(budget), red_(g.vertex_count()), blue_(g.vertex_count()) {
    classes_ = tc.members();
    std::stable_sort(classes_.begin(), classes_.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    state_.assign(classes_.size(), kUnassigned);
  }

  // Visits each NAC-colouring with the first class red. visit(colours)
  // returns false to stop. Returns false if the budget ran out.
  template <class Visit>
  bool run(Visit&& visit) {
    if (classes_.empty()) return true;
    stopped_ = false;
    const auto mark = save();
    if (assign(0, Colour::Red) && propagate()) descend(visit);
    restore(mark);
    return !meter_.exceeded();
  }

  std::uint64_t nodes() const noexcept { return meter_.nodes(); }

 private:
  static constexpr std::int8_t kUnassigned = -1;

  struct Mark {
    std::size_t red_dsu, blue_dsu, red_edges, blue_edges, trail;
  };

  Mark save() const {
    return {red_.checkpoint(), blue_.checkpoint(), red_edges_.size(), blue_edges_.size(), trail_.size()};
  }

  void restore(const Mark& m) {
    red_.rollback(m.red_dsu);
    blue_.rollback(m.blue_dsu);
    red_edges_.resize(m.red_edges);
    blue_edges_.resize(m.blue_edges);
    while (trail_.size() > m.trail) {
      state_[trail_.back()] = kUnassigned;
      trail_.pop_back();
    }
  }

  RollbackDisjointSets& dsu(Colour c) { return c == Colour::Red ? red_ : blue_; }
  std::vector<EdgeId>& edges(Colour c) { return c == Colour::Red ? red_edges_ : blue_edges_; }

  bool assign(std::size_t cls, Colour c) {
    state_[cls] = static_cast<std::int8_t>(c);
    trail_.push_back(cls);
    RollbackDisjointSets& same = dsu(c);
    RollbackDisjointSets& other = dsu(opposite(c));
    for (EdgeId e : classes_[cls]) {
      const Edge& ed = g_.edge(e);
      if (other.same(ed.u, ed.v)) return false;
      same.unite(ed.u, ed.v);
      edges(c).push_back(e);
    }
    for (EdgeId e : edges(opposite(c))) {
      const Edge& ed = g_.edge(e);
      if (same.same(ed.u, ed.v)) return false;
    }
    return true;
  }

  bool propagate() {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t cls = 0; cls < classes_.size(); ++cls) {
        if (state_[cls] != kUnassigned) continue;
        bool in_red = false, in_blue = false;
        for (EdgeId e : classes_[cls]) {
          const Edge& ed = g_.edge(e);
          in_red = in_red || red_.same(ed.u, ed.v);
          in_blue = in_blue || blue_.same(ed.u, ed.v);
        }
        if (in_red && in_blue) return false;
        if (!in_red && !in_blue) continue;
        if (!assign(cls, in_red ? Colour::Red : Colour::Blue)) return false;
        changed = true;
      }
    }
    return true;
  }

  template <class Visit>
  void descend(Visit& visit) {
    if (stopped_ || !meter_.charge()) return;
    auto next = std::find(state_.begin(), state_.end(), kUnassigned);
    if (next == state_.end()) {
      if (blue_edges_.empty()) return;  // not surjective
      std::vector<Colour> colours(g_.edge_count());
      for (std::size_t cls = 0; cls < classes_.size(); ++cls)
        for (EdgeId e : classes_[cls]) colours[e] = static_cast<Colour>(state_[cls]);
      if (!visit(std::move(colours))) stopped_ = true;
      return;
    }
    const auto cls = static_cast<std::size_t>(next - state_.begin());
    for (Colour c : {Colour::Red, Colour::Blue}) {
      const auto mark = save();
      if (assign(cls, c) && propagate()) descend(visit);
      restore(mark);
      if (stopped_ || meter_.exceeded()) return;
    }
  }

  const Graph& g_;
  BudgetMeter meter_;
  std::vector<std::vector<EdgeId>> classes_;
  std::vector<std::int8_t> state_;
  std::vector<std::size_t> trail_;
  RollbackDisjointSets red_, blue_;
  std::vector<EdgeId> red_edges_, blue_edges_;
  bool stopped_ = false;
};

}  // namespace detail

// Finds a NAC-colouring or proves there is none. Budget exhaustion, or more
// than max_classes triangle classes without force, gives BudgetExceeded.
inline SearchResult<EdgeColouring> nac_exists(const Graph& g, const NacSearchOptions& opts = {}) {
  SearchResult<EdgeColouring> out;
  const auto tc = triangle_classes(g);
  if (tc.count < 2) return out;  // one class cannot be coloured surjectively
  if (tc.count > opts.max_classes && !opts.force) {
    out.status = SearchStatus::BudgetExceeded;
    return out;
  }
  detail::NacClassSearch search(g, tc, opts.budget);
  std::optional<std::vector<Colour>> hit;
  const bool complete = search.run([&](std::vector<Colour> colours) {
    hit = std::move(colours);
    return false;
  });
  out.nodes = search.nodes();
  if (hit) {
    out.status = SearchStatus::Found;
    out.value.emplace(g, std::move(*hit));
  } else if (!complete) {
    out.status = SearchStatus::BudgetExceeded;
  }
  return out;
}

struct NacEnumeration {
  std::vector<EdgeColouring> colourings;  // sorted, closed under colour swap when complete
  std::uint64_t count = 0;                // exact when complete
  bool complete = false;
  bool cap_exceeded = false;
  std::uint64_t nodes = 0;
};

// All NAC-colourings as maps E -> {red, blue}; a colouring and its swap are
// both listed. At most `cap` colourings are stored; beyond that the result is
// partial and cap_exceeded is set.
inline NacEnumeration nac_enumerate(const Graph& g, std::uint64_t cap = UINT64_MAX, const NacSearchOptions& opts = {}) {
  NacEnumeration out;
  const auto tc = triangle_classes(g);
  if (tc.count < 2) {
    out.complete = true;
    return out;
  }
  if (tc.count > opts.max_classes && !opts.force) return out;
  detail::NacClassSearch search(g, tc, opts.budget);
  const bool finished = search.run([&](std::vector<Colour> colours) {
    if (out.count + 2 > cap) {
      out.cap_exceeded = true;
      return false;
    }
    EdgeColouring c(g, std::move(colours));
    out.colourings.push_back(c.swapped());
    out.colourings.push_back(std::move(c));
    out.count += 2;
    return true;
  });
  out.nodes = search.nodes();
  out.complete = finished && !out.cap_exceeded;
  std::sort(out.colourings.begin(), out.colourings.end());
  return out;
}

}  // namespace nacflex
