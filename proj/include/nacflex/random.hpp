#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nacflex/error.hpp"
#include "nacflex/graph.hpp"

namespace nacflex {

// Stream derivation and sampling primitives are pinned: golden files record
// this string, and any change to the generator or to the derived-value
// routines below must change it.
inline constexpr std::string_view kGeneratorVersion = "mt19937_64/splitmix64-stream/v1";

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Deterministic random stream for (master_seed, stream_id). The engine is
// std::mt19937_64, whose output sequence is fixed by the standard; uniform
// reals and bounded integers are derived here rather than through
// <random> distributions, which vary between standard libraries.
class RandomSource {
 public:
  RandomSource(std::uint64_t master_seed, std::uint64_t stream_id)
      : master_seed_(master_seed), stream_id_(stream_id),
        engine_(splitmix64(master_seed ^ splitmix64(stream_id ^ 0xD1B54A32D192ED03ull))) {}

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x < limit) return x % bound;
    }
  }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

  RandomSource substream(std::uint64_t id) const { return RandomSource(splitmix64(master_seed_ ^ stream_id_), id); }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

// Potential edges of K_n are indexed lexicographically: (0,1),(0,2),...,(n-2,n-1).
inline std::uint64_t pair_count(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

inline Edge pair_from_index(std::uint64_t n, std::uint64_t idx) {
  // Row u starts at u*(2n-u-1)/2; solve for u then correct rounding.
  const double nd = static_cast<double>(n);
  auto u = static_cast<std::uint64_t>(
      std::floor((2 * nd - 1 - std::sqrt((2 * nd - 1) * (2 * nd - 1) - 8 * static_cast<double>(idx))) / 2));
  auto row_start = [n](std::uint64_t r) { return r * (2 * n - r - 1) / 2; };
  while (u > 0 && row_start(u) > idx) --u;
  while (u + 1 < n && row_start(u + 1) <= idx) ++u;
  const std::uint64_t v = u + 1 + (idx - row_start(u));
  return Edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
}

namespace detail {

// Visits indices selected independently with probability p, in increasing
// order, by geometric skipping.
template <class F>
void bernoulli_indices(std::uint64_t universe, double p, RandomSource& src, F&& f) {
  if (p <= 0 || universe == 0) return;
  if (p >= 1) {
    for (std::uint64_t i = 0; i < universe; ++i) f(i);
    return;
  }
  const double log_q = std::log1p(-p);
  std::uint64_t i = 0;
  for (;;) {
    const double skip = std::floor(std::log1p(-src.uniform()) / log_q);
    if (skip >= static_cast<double>(universe - i)) return;
    i += static_cast<std::uint64_t>(skip);
    f(i);
    if (++i >= universe) return;
  }
}

}  // namespace detail

inline Graph gnp(std::size_t n, double p, RandomSource& src) {
  require(p >= 0 && p <= 1, ErrorKind::InvalidArgument, "edge probability must lie in [0,1]");
  std::vector<Edge> edges;
  detail::bernoulli_indices(pair_count(n), p, src, [&](std::uint64_t idx) { edges.push_back(pair_from_index(n, idx)); });
  return Graph(n, std::move(edges));
}

// G(n,p) for several p from one set of random numbers: every potential edge
// e carries U_e ~ U[0,1) and graph i keeps {e : U_e < ps[i]}. Only edges with
// U_e below max(ps) are materialised, so the cost is O(n + m_max).
inline std::vector<Graph> coupled_gnp(std::size_t n, const std::vector<double>& ps, RandomSource& src) {
  double top = 0;
  for (double p : ps) {
    require(p >= 0 && p <= 1, ErrorKind::InvalidArgument, "edge probability must lie in [0,1]");
    top = std::max(top, p);
  }
  std::vector<std::vector<Edge>> edges(ps.size());
  detail::bernoulli_indices(pair_count(n), top, src, [&](std::uint64_t idx) {
    const double u = src.uniform() * top;
    const Edge e = pair_from_index(n, idx);
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (u < ps[i]) edges[i].push_back(e);
  });
  std::vector<Graph> out;
  out.reserve(ps.size());
  for (auto& list : edges) out.emplace_back(n, std::move(list));
  return out;
}

// Uniform m-subset of the potential edges by a sparse partial Fisher-Yates
// shuffle of the index universe.
inline Graph gnm(std::size_t n, std::uint64_t m, RandomSource& src) {
  const std::uint64_t universe = pair_count(n);
  require(m <= universe, ErrorKind::InvalidArgument, "edge count exceeds C(n,2)");
  std::unordered_map<std::uint64_t, std::uint64_t> moved;
  auto at = [&](std::uint64_t i) {
    auto it = moved.find(i);
    return it == moved.end() ? i : it->second;
  };
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    const std::uint64_t j = i + src.below(universe - i);
    const std::uint64_t picked = at(j);
    moved[j] = at(i);
    edges.push_back(pair_from_index(n, picked));
  }
  return Graph(n, std::move(edges));
}

struct RegularSample {
  Graph graph;
  std::uint64_t rejections = 0;
};

// Configuration model: n*k edge-ends paired uniformly, rejected until the
// resulting multigraph is simple.
inline RegularSample regular_configuration(std::size_t n, std::size_t k, RandomSource& src, std::uint64_t max_rejects = 10'000) {
  require((n * k) % 2 == 0, ErrorKind::Parity, "n*k must be even");
  require(k < n || (k == 0 && n == 0), ErrorKind::InvalidArgument, "degree must be below n");
  RegularSample out;
  std::vector<Vertex> ends(n * k);
  std::vector<Edge> edges;
  for (;;) {
    for (std::size_t i = 0; i < ends.size(); ++i) ends[i] = static_cast<Vertex>(i / k);
    src.shuffle(ends);
    edges.clear();
    bool simple = true;
    for (std::size_t i = 0; i < ends.size() && simple; i += 2) {
      if (ends[i] == ends[i + 1]) simple = false;
      else edges.emplace_back(ends[i], ends[i + 1]);
    }
    if (simple) {
      std::sort(edges.begin(), edges.end());
      simple = std::adjacent_find(edges.begin(), edges.end()) == edges.end();
    }
    if (simple) {
      out.graph = Graph(n, std::move(edges));
      return out;
    }
    if (++out.rejections > max_rejects) fail(ErrorKind::RejectionBudget, "configuration model rejected too many pairings");
  }
}

// (2 ln n / n^2)^(1/3): natural logarithm.
inline double p_star(std::size_t n) {
  require(n >= 2, ErrorKind::InvalidArgument, "p_star needs n >= 2");
  const double nd = static_cast<double>(n);
  return std::cbrt(2.0 * std::log(nd) / (nd * nd));
}

}  // namespace nacflex
