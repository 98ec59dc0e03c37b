#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "nacflex/bitset.hpp"
#include "nacflex/budget.hpp"
#include "nacflex/colouring.hpp"
#include "nacflex/error.hpp"
#include "nacflex/graph.hpp"

namespace nacflex {

enum class CutKind {
  Stable,           // S stable, G - S disconnected
  Firm,             // stable cut, every component of G - S has >= 2 vertices
  SprimeViolation,  // stable cut with >= 3 components, or 2 components both of size >= 2
};

constexpr std::string_view to_string(CutKind k) noexcept {
  switch (k) {
    case CutKind::Stable: return "stable";
    case CutKind::Firm: return "firm";
    case CutKind::SprimeViolation: return "sprime-violation";
  }
  return "?";
}

struct CutCertificate {
  VertexSet s;
  ComponentLabelling components;   // over the vertices of G - S
  std::vector<Vertex> to_original;  // vertex of G - S -> vertex of G
  CutKind kind = CutKind::Stable;

  // Components of G - S in original vertex ids.
  std::vector<std::vector<Vertex>> original_components() const {
    auto groups = components.groups();
    for (auto& grp : groups)
      for (auto& v : grp) v = to_original[v];
    return groups;
  }
};

inline CutCertificate make_certificate(const Graph& g, VertexSet s, CutKind kind) {
  auto sub = induced_delete(g, s);
  CutCertificate cert;
  cert.components = components(sub.graph);
  cert.to_original = std::move(sub.to_original);
  cert.s = std::move(s);
  cert.kind = kind;
  return cert;
}

// Checks the certificate's claim from scratch.
inline bool certificate_valid(const Graph& g, const CutCertificate& cert) {
  if (!is_stable(g, cert.s)) return false;
  const auto fresh = make_certificate(g, cert.s, cert.kind);
  const auto sizes = fresh.components.sizes();
  if (fresh.components.count < 2) return false;
  switch (cert.kind) {
    case CutKind::Stable: return true;
    case CutKind::Firm: return std::all_of(sizes.begin(), sizes.end(), [](auto s) { return s >= 2; });
    case CutKind::SprimeViolation: return sizes.size() >= 3 || (sizes[0] >= 2 && sizes[1] >= 2);
  }
  return false;
}

namespace detail {

// Enumerates connected vertex sets A whose closed neighbourhood leaves
// something behind and whose open neighbourhood S = N(A) is stable. A grows
// from its smallest vertex; each frontier vertex is branched into S or into
// A. Stability propagates: a frontier vertex adjacent to S must join A, and
// a frontier vertex below the root must join S. Taking A to be the smallest
// relevant component bounds 2|A| + |S| <= n.
template <class Bits>
class SeparatorSearch {
 public:
  SeparatorSearch(const Graph& g, CutKind kind, const Budget& budget)
      : n_(g.vertex_count()), kind_(kind), meter_(budget), nbr_(n_, Bits(n_)), all_(n_), isolated_(n_) {
    for (Vertex v = 0; v < n_; ++v) {
      all_.set(v);
      if (g.degree(v) == 0) isolated_.set(v);
      for (Vertex w : g.neighbours(v)) nbr_[v].set(w);
    }
  }

  SearchStatus run() {
    if (kind_ == CutKind::SprimeViolation && pair_violation()) return SearchStatus::Found;
    Bits below(n_);
    for (Vertex a = 0; a < n_; ++a) {
      State st(n_);
      st.a.set(a);
      st.not_a = below;
      st.na = nbr_[a];
      below.set(a);
      if (explore(std::move(st))) return SearchStatus::Found;
      if (meter_.exceeded()) return SearchStatus::BudgetExceeded;
    }
    return SearchStatus::None;
  }

  std::vector<Vertex> separator() const {
    std::vector<Vertex> out;
    found_.for_each([&](std::size_t v) { out.push_back(static_cast<Vertex>(v)); });
    return out;
  }

  std::uint64_t nodes() const noexcept { return meter_.nodes(); }

 private:
  struct State {
    explicit State(std::size_t n) : a(n), s(n), not_a(n), not_s(n), na(n) {}
    Bits a, s, not_a, not_s, na;
  };

  bool stable(const Bits& x) const {
    bool ok = true;
    x.for_each([&](std::size_t v) { ok = ok && !nbr_[v].intersects(x); });
    return ok;
  }

  std::vector<std::size_t> component_sizes(Bits rest) const {
    std::vector<std::size_t> sizes;
    while (rest.any()) {
      Bits comp(n_);
      comp.set(rest.first());
      for (Bits grow = comp; grow.any();) {
        Bits next(n_);
        grow.for_each([&](std::size_t v) { next |= nbr_[v]; });
        next &= rest;
        next -= comp;
        comp |= next;
        grow = next;
      }
      sizes.push_back(comp.count());
      rest -= comp;
    }
    return sizes;
  }

  // Two non-adjacent vertices u, w with N(u) u N(w) stable and something
  // left over: G - (N(u) u N(w)) has u, w as singleton components plus more.
  bool pair_violation() {
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex w = u + 1; w < n_; ++w) {
        if (!meter_.charge()) return false;
        if (nbr_[u].test(w)) continue;
        Bits s = nbr_[u] | nbr_[w];
        Bits rest = all_ - s;
        rest.reset(u);
        rest.reset(w);
        if (rest.none() || !stable(s)) continue;
        found_ = s;
        return true;
      }
    }
    return false;
  }

  bool leaf(const State& st) {
    Bits s = st.s;
    if (kind_ == CutKind::Firm) s |= isolated_ - st.a;
    const Bits rest = all_ - st.a - s;
    if (rest.none()) return false;
    const std::size_t a_size = st.a.count();
    bool ok = false;
    switch (kind_) {
      case CutKind::Stable:
        ok = true;
        break;
      case CutKind::Firm: {
        if (a_size < 2) return false;
        const auto sizes = component_sizes(rest);
        ok = std::all_of(sizes.begin(), sizes.end(), [](auto x) { return x >= 2; });
        break;
      }
      case CutKind::SprimeViolation: {
        const auto sizes = component_sizes(rest);
        ok = sizes.size() >= 2 || (a_size >= 2 && sizes[0] >= 2);
        break;
      }
    }
    if (ok) found_ = s;
    return ok;
  }

  bool explore(State st) {
    if (!meter_.charge()) return false;
    Bits frontier(n_);
    for (;;) {
      frontier = st.na - st.a - st.s;
      Bits closure = st.a | st.s | frontier;
      if (kind_ == CutKind::Firm) closure |= isolated_;
      if (closure == all_) return false;
      const Bits to_s = frontier & st.not_a;
      if (to_s.any()) {
        if (to_s.intersects(st.not_s) || !stable(to_s)) return false;
        st.s |= to_s;
        st.not_a |= to_s;
        to_s.for_each([&](std::size_t v) { st.not_s |= nbr_[v]; });
        continue;
      }
      const Bits to_a = frontier & st.not_s;
      if (to_a.any()) {
        st.a |= to_a;
        to_a.for_each([&](std::size_t v) { st.na |= nbr_[v]; });
        continue;
      }
      break;
    }
    if (2 * st.a.count() + st.s.count() > n_) return false;
    if (frontier.none()) return leaf(st);

    const std::size_t v = frontier.first();
    {
      State child = st;
      child.s.set(v);
      child.not_a.set(v);
      child.not_s |= nbr_[v];
      if (explore(std::move(child))) return true;
      if (meter_.exceeded()) return false;
    }
    st.a.set(v);
    st.na |= nbr_[v];
    return explore(std::move(st));
  }

  std::size_t n_;
  CutKind kind_;
  BudgetMeter meter_;
  std::vector<Bits> nbr_;
  Bits all_, isolated_;
  Bits found_{0};
};

// The empty set is a cut exactly when the graph is disconnected.
inline std::optional<CutCertificate> empty_cut(const Graph& g, CutKind kind) {
  auto cert = make_certificate(g, VertexSet{}, kind);
  return certificate_valid(g, cert) ? std::optional(std::move(cert)) : std::nullopt;
}

inline SearchResult<CutCertificate> find_cut(const Graph& g, CutKind kind, const Budget& budget) {
  SearchResult<CutCertificate> out;
  if (g.vertex_count() < 2) return out;
  if (auto cert = empty_cut(g, kind)) {
    out.status = SearchStatus::Found;
    out.value = std::move(cert);
    return out;
  }
  return with_bitset_for(g.vertex_count(), [&](auto proto) {
    using Bits = decltype(proto);
    SeparatorSearch<Bits> search(g, kind, budget);
    out.status = search.run();
    out.nodes = search.nodes();
    if (out.found()) {
      out.value = make_certificate(g, VertexSet(search.separator()), kind);
      if (!certificate_valid(g, *out.value)) fail(ErrorKind::Internal, "cut search produced an invalid certificate");
    }
    return out;
  });
}

}  // namespace detail

inline SearchResult<CutCertificate> stable_cut_exists(const Graph& g, const Budget& budget = {}) {
  return detail::find_cut(g, CutKind::Stable, budget);
}

inline SearchResult<CutCertificate> firm_cut_exists(const Graph& g, const Budget& budget = {}) {
  return detail::find_cut(g, CutKind::Firm, budget);
}

struct SprimeResult {
  SearchStatus status = SearchStatus::None;  // Found: property fails (violating cut found)
  bool holds = false;
  std::optional<CutCertificate> violation;
  std::uint64_t nodes = 0;
};

inline SprimeResult sprime_holds(const Graph& g, const Budget& budget = {}) {
  auto r = detail::find_cut(g, CutKind::SprimeViolation, budget);
  return {r.status, r.none(), std::move(r.value), r.nodes};
}

struct SDecomposition {
  bool budget_exceeded = false;
  bool in_T = false;
  bool in_Sprime = false;
  bool in_S = false;
};

// Decides T, S' and S independently and asserts S = T n S'. The identity
// needs n >= 3: K1 and K2 have no stable cut yet no triangle.
inline SDecomposition decompose_s(const Graph& g, const Budget& budget = {}) {
  SDecomposition d;
  d.in_T = every_vertex_in_triangle(g).all_covered;
  const auto sprime = sprime_holds(g, budget);
  const auto stable = stable_cut_exists(g, budget);
  if (sprime.status == SearchStatus::BudgetExceeded || stable.budget_exceeded()) {
    d.budget_exceeded = true;
    return d;
  }
  d.in_Sprime = sprime.holds;
  d.in_S = stable.none();
  if (g.vertex_count() >= 3 && d.in_S != (d.in_T && d.in_Sprime))
    fail(ErrorKind::Internal, "decision mismatch: S != T and S' on a graph with n=" + std::to_string(g.vertex_count()));
  return d;
}

// Edges meeting one component A of G - S red, all others blue. A is the
// smallest component that has an incident edge while some edge avoids it,
// ties to the lowest vertex.
inline EdgeColouring stable_cut_to_nac(const Graph& g, const CutCertificate& cert) {
  require(certificate_valid(g, CutCertificate{cert.s, cert.components, cert.to_original, CutKind::Stable}),
          ErrorKind::Precondition, "certificate is not a stable cut of this graph");
  const auto groups = cert.original_components();
  std::optional<std::size_t> best;
  std::vector<bool> in_a(g.vertex_count());
  bool any_incident = false;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    std::fill(in_a.begin(), in_a.end(), false);
    for (Vertex v : groups[i]) in_a[v] = true;
    std::size_t incident = 0;
    for (const Edge& e : g.edges()) incident += (in_a[e.u] || in_a[e.v]) ? 1 : 0;
    if (incident == 0) continue;
    any_incident = true;
    if (incident == g.edge_count()) continue;
    if (!best || groups[i].size() < groups[*best].size()) best = i;  // groups are ordered by lowest vertex
  }
  if (!any_incident) fail(ErrorKind::Precondition, "no component of G - S has an incident edge");
  if (!best) fail(ErrorKind::Precondition, "every edge meets the chosen component; no blue edge available");
  std::fill(in_a.begin(), in_a.end(), false);
  for (Vertex v : groups[*best]) in_a[v] = true;
  return EdgeColouring::red_where(g, [&](EdgeId e) { return in_a[g.edge(e).u] || in_a[g.edge(e).v]; });
}

}  // namespace nacflex
