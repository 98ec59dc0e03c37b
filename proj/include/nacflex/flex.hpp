#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include "nacflex/colouring.hpp"
#include "nacflex/error.hpp"
#include "nacflex/graph.hpp"
#include "nacflex/random.hpp"

namespace nacflex {

using Vec2 = std::array<double, 2>;

inline double distance(const Vec2& a, const Vec2& b) { return std::hypot(a[0] - b[0], a[1] - b[1]); }

// One-parameter motion from a NAC-colouring:
//   p_theta(v) = x[B(v)] + Rot(theta) * y[R(v)]
// with R, B the red and blue component labellings. A red edge joins two
// blue components and lies inside one red component, so its length is
// |x[B(u)] - x[B(v)]| for every theta; blue edges likewise with y.
struct FlexFamily {
  const Graph* graph = nullptr;
  std::vector<Colour> colours;
  ComponentLabelling red_components;
  ComponentLabelling blue_components;
  std::vector<Vec2> y;  // per red component
  std::vector<Vec2> x;  // per blue component
};

inline double min_pairwise_distance(const std::vector<Vec2>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, distance(pts[i], pts[j]));
  return best;
}

// Uses the given base vectors (indexed by component label) after checking
// the NAC condition and distinctness.
inline FlexFamily make_flex(const Graph& g, const EdgeColouring& c, std::vector<Vec2> x, std::vector<Vec2> y) {
  require(nac_check(c).is_nac, ErrorKind::NotNac, "flex family needs a NAC-colouring");
  FlexFamily f;
  f.graph = &g;
  f.colours = c.colours();
  f.red_components = monochromatic_components(c, Colour::Red);
  f.blue_components = monochromatic_components(c, Colour::Blue);
  require(x.size() == f.blue_components.count, ErrorKind::InvalidArgument, "need one x vector per blue component");
  require(y.size() == f.red_components.count, ErrorKind::InvalidArgument, "need one y vector per red component");
  require(min_pairwise_distance(x) > 0 && min_pairwise_distance(y) > 0, ErrorKind::InvalidArgument,
          "base vectors must be pairwise distinct");
  f.x = std::move(x);
  f.y = std::move(y);
  return f;
}

inline constexpr double kMinBaseSeparation = 1e-3;

// Base vectors uniform in [0,1)^2, each redrawn until it is at least
// kMinBaseSeparation from those already placed.
inline FlexFamily build_flex(const Graph& g, const EdgeColouring& c, RandomSource& src) {
  require(nac_check(c).is_nac, ErrorKind::NotNac, "flex family needs a NAC-colouring");
  auto draw = [&](std::size_t count) {
    std::vector<Vec2> pts;
    pts.reserve(count);
    while (pts.size() < count) {
      const Vec2 p{src.uniform(), src.uniform()};
      if (std::all_of(pts.begin(), pts.end(), [&](const Vec2& q) { return distance(p, q) >= kMinBaseSeparation; }))
        pts.push_back(p);
    }
    return pts;
  };
  const auto reds = monochromatic_components(c, Colour::Red).count;
  const auto blues = monochromatic_components(c, Colour::Blue).count;
  auto y = draw(reds);
  auto x = draw(blues);
  return make_flex(g, c, std::move(x), std::move(y));
}

inline std::vector<Vec2> sample_positions(const FlexFamily& f, double theta) {
  const double cs = std::cos(theta), sn = std::sin(theta);
  const std::size_t n = f.red_components.label.size();
  std::vector<Vec2> out(n);
  for (Vertex v = 0; v < n; ++v) {
    const Vec2& xv = f.x[f.blue_components.label[v]];
    const Vec2& yv = f.y[f.red_components.label[v]];
    out[v] = {xv[0] + cs * yv[0] - sn * yv[1], xv[1] + sn * yv[0] + cs * yv[1]};
  }
  return out;
}

// Uniform grid of `samples` angles on [0, 2 pi), starting at 0.
inline std::vector<double> theta_grid(std::size_t samples) {
  std::vector<double> out(samples);
  for (std::size_t i = 0; i < samples; ++i)
    out[i] = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(samples);
  return out;
}

struct FlexReport {
  std::size_t samples = 0;
  double max_edge_drift = 0;       // max |len(theta) - len(0)| over edges and angles
  double max_pair_variation = 0;   // max over vertex pairs of (max - min) distance
  Vertex varying_u = 0, varying_v = 0;
  double min_edge_length = std::numeric_limits<double>::infinity();
  double edge_length_lower_bound = 0;  // min separation of the relevant base vectors
};

inline FlexReport verify_flex(const FlexFamily& f, std::size_t samples = 64) {
  const Graph& g = *f.graph;
  const std::size_t n = g.vertex_count();
  FlexReport rep;
  rep.samples = samples;
  const auto thetas = theta_grid(samples);
  const auto base = sample_positions(f, 0.0);
  std::vector<double> base_len(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) base_len[e] = distance(base[g.edge(e).u], base[g.edge(e).v]);

  std::vector<double> lo(n * n, std::numeric_limits<double>::infinity()), hi(n * n, 0.0);
  for (double theta : thetas) {
    const auto pos = sample_positions(f, theta);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const double len = distance(pos[g.edge(e).u], pos[g.edge(e).v]);
      rep.max_edge_drift = std::max(rep.max_edge_drift, std::abs(len - base_len[e]));
      rep.min_edge_length = std::min(rep.min_edge_length, len);
    }
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        const double d = distance(pos[u], pos[v]);
        lo[u * n + v] = std::min(lo[u * n + v], d);
        hi[u * n + v] = std::max(hi[u * n + v], d);
      }
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (hi[u * n + v] - lo[u * n + v] > rep.max_pair_variation) {
        rep.max_pair_variation = hi[u * n + v] - lo[u * n + v];
        rep.varying_u = u;
        rep.varying_v = v;
      }
  if (g.edge_count() == 0) rep.min_edge_length = 0;

  rep.edge_length_lower_bound = std::numeric_limits<double>::infinity();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    const double d = f.colours[e] == Colour::Red
                         ? distance(f.x[f.blue_components.label[u]], f.x[f.blue_components.label[v]])
                         : distance(f.y[f.red_components.label[u]], f.y[f.red_components.label[v]]);
    rep.edge_length_lower_bound = std::min(rep.edge_length_lower_bound, d);
  }
  return rep;
}

}  // namespace nacflex
