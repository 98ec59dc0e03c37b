#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nacflex/budget.hpp"
#include "nacflex/cuts.hpp"
#include "nacflex/disjoint_sets.hpp"
#include "nacflex/error.hpp"
#include "nacflex/graph.hpp"
#include "nacflex/nac_search.hpp"
#include "nacflex/random.hpp"

namespace nacflex {

// Random graph process on n vertices: a uniformly random ordering of all
// potential edges. prefix(t) is G_t, distributed as G(n;t).
class ProcessTrace {
 public:
  ProcessTrace() = default;

  // Replays a fixed order. The order must list every potential edge once.
  static ProcessTrace from_order(std::size_t n, std::vector<Edge> order) {
    require(order.size() == pair_count(n), ErrorKind::InvalidArgument, "edge order must list all C(n,2) pairs");
    std::vector<bool> seen(order.size(), false);
    for (const Edge& e : order) {
      require(e.u != e.v && e.v < n, ErrorKind::InvalidVertex, "edge order contains an invalid pair");
      const std::uint64_t idx = e.u * (2 * static_cast<std::uint64_t>(n) - e.u - 1) / 2 + (e.v - e.u - 1);
      require(!seen[idx], ErrorKind::InvalidArgument, "edge order repeats a pair");
      seen[idx] = true;
    }
    ProcessTrace t;
    t.n_ = n;
    t.order_ = std::move(order);
    return t;
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t length() const noexcept { return order_.size(); }
  const std::vector<Edge>& edge_order() const noexcept { return order_; }

  Graph prefix(std::size_t t) const {
    require(t <= order_.size(), ErrorKind::InvalidArgument, "prefix length exceeds C(n,2)");
    return Graph(n_, std::vector<Edge>(order_.begin(), order_.begin() + static_cast<std::ptrdiff_t>(t)));
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> order_;
};

inline ProcessTrace process(std::size_t n, RandomSource& src) {
  std::vector<Edge> order(pair_count(n));
  for (std::uint64_t i = 0; i < order.size(); ++i) order[i] = pair_from_index(n, i);
  src.shuffle(order);
  return ProcessTrace::from_order(n, std::move(order));
}

enum class HitStatus { Computed, Never, BudgetExceeded };

struct HittingTime {
  HitStatus status = HitStatus::Never;
  std::uint64_t t = 0;

  bool computed() const noexcept { return status == HitStatus::Computed; }
  friend bool operator==(const HittingTime&, const HittingTime&) = default;
};

struct HittingRecord {
  HittingTime conn, T, S, N;
  std::uint64_t decisions = 0;        // graph decisions made by the binary searches
  std::uint64_t identity_checks = 0;  // times S = T n S' was cross-checked
};

struct HittingOptions {
  Budget budget = Budget::nodes(20'000'000);  // per decision
  bool check_identity = true;
  std::uint32_t max_classes = 64;  // generous; the node budget is the real guard
};

namespace detail {

// Smallest t in [lo, hi] with pred(t) true, for pred monotone and pred(hi)
// true. pred returns nullopt when a decision exhausted its budget.
template <class Pred>
HittingTime monotone_search(std::uint64_t lo, std::uint64_t hi, Pred&& pred) {
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    const std::optional<bool> v = pred(mid);
    if (!v) return {HitStatus::BudgetExceeded, 0};
    if (*v) hi = mid;
    else lo = mid + 1;
  }
  return {HitStatus::Computed, lo};
}

}  // namespace detail

// tau_conn and tau_T are found in one incremental pass. tau_S and tau_N are
// binary searches over [tau_T, C(n,2)], valid because both properties are
// monotone and imply T. Each tau_S query runs decompose_s, so the identity
// S = T n S' is asserted at every queried t (and once at tau_T - 1).
inline HittingRecord hitting_times(const ProcessTrace& trace, const HittingOptions& opts = {}) {
  const std::size_t n = trace.vertex_count();
  const std::uint64_t total = trace.length();
  HittingRecord rec;

  {
    DisjointSets dsu(n);
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> rows(n * words, 0);
    std::vector<bool> covered(n, false);
    std::size_t uncovered = n;
    if (n <= 1) rec.conn = {HitStatus::Computed, 0};
    auto cover = [&](Vertex v) {
      if (!covered[v]) {
        covered[v] = true;
        --uncovered;
      }
    };
    for (std::uint64_t t = 1; t <= total; ++t) {
      const Edge& e = trace.edge_order()[t - 1];
      dsu.unite(e.u, e.v);
      if (!rec.conn.computed() && dsu.set_count() == 1) rec.conn = {HitStatus::Computed, t};
      if (!rec.T.computed()) {
        const std::uint64_t* ru = &rows[e.u * words];
        const std::uint64_t* rv = &rows[e.v * words];
        for (std::size_t k = 0; k < words; ++k) {
          for (std::uint64_t x = ru[k] & rv[k]; x; x &= x - 1) {
            cover(static_cast<Vertex>(k * 64 + static_cast<std::size_t>(std::countr_zero(x))));
            cover(e.u);
            cover(e.v);
          }
        }
        if (uncovered == 0) rec.T = {HitStatus::Computed, t};
      }
      rows[e.u * words + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
      rows[e.v * words + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
    }
  }
  if (!rec.T.computed()) return rec;  // n < 3: no vertex can lie in a triangle

  auto no_stable_cut = [&](std::uint64_t t) -> std::optional<bool> {
    ++rec.decisions;
    const Graph g = trace.prefix(t);
    if (opts.check_identity) {
      const auto d = decompose_s(g, opts.budget);
      if (d.budget_exceeded) return std::nullopt;
      ++rec.identity_checks;
      return d.in_S;
    }
    const auto r = stable_cut_exists(g, opts.budget);
    if (r.budget_exceeded()) return std::nullopt;
    return r.none();
  };

  if (opts.check_identity && rec.T.t > 0) {
    const auto d = decompose_s(trace.prefix(rec.T.t - 1), opts.budget);
    if (!d.budget_exceeded) {
      ++rec.identity_checks;
      if (d.in_S) fail(ErrorKind::Internal, "graph without T has no stable cut");
    }
  }
  rec.S = detail::monotone_search(rec.T.t, total, no_stable_cut);

  NacSearchOptions nac_opts;
  nac_opts.budget = opts.budget;
  nac_opts.max_classes = opts.max_classes;
  auto property_n = [&](std::uint64_t t) -> std::optional<bool> {
    ++rec.decisions;
    const Graph g = trace.prefix(t);
    if (!is_connected(g)) return false;
    const auto r = nac_exists(g, nac_opts);
    if (r.budget_exceeded()) return std::nullopt;
    return r.none();
  };
  rec.N = detail::monotone_search(rec.T.t, total, property_n);
  return rec;
}

inline bool ordering_holds(const HittingRecord& r) {
  if (!r.T.computed() || !r.S.computed() || !r.N.computed()) return true;
  return r.T.t <= r.S.t && r.S.t <= r.N.t && (!r.conn.computed() || r.conn.t <= r.N.t);
}

}  // namespace nacflex
