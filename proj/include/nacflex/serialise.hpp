#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "nacflex/colouring.hpp"
#include "nacflex/cuts.hpp"
#include "nacflex/error.hpp"
#include "nacflex/flex.hpp"
#include "nacflex/graph.hpp"
#include "nacflex/graph_io.hpp"
#include "nacflex/process.hpp"
#include "nacflex/stable_nac.hpp"

namespace nacflex {

// Colouring file: {"graph": {"n":..,"edges":[..]}, "red": [[u,v],...]};
// every edge not listed is blue.
inline nlohmann::json colouring_to_json(const EdgeColouring& c) {
  nlohmann::json red = nlohmann::json::array();
  for (const Edge& e : c.edges_of(Colour::Red)) red.push_back({e.u, e.v});
  return {{"graph", graph_to_json(c.graph())}, {"red", std::move(red)}};
}

// The colouring refers to `g`, which must outlive it.
inline EdgeColouring colouring_from_json(const nlohmann::json& j, const Graph& g) {
  try {
    std::vector<Edge> red;
    for (const auto& e : j.at("red")) {
      if (!e.is_array() || e.size() != 2) fail(ErrorKind::Parse, "red edge must be a [u,v] pair");
      const auto u = e[0].get<std::int64_t>(), v = e[1].get<std::int64_t>();
      if (u < 0 || v < 0 || u >= static_cast<std::int64_t>(g.vertex_count()) ||
          v >= static_cast<std::int64_t>(g.vertex_count()) || u == v)
        fail(ErrorKind::InvalidVertex, "red edge endpoint out of range");
      red.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return EdgeColouring::from_red_edges(g, red);
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorKind::Parse, std::string("colouring JSON: ") + ex.what());
  }
}

inline nlohmann::json certificate_to_json(const CutCertificate& cert) {
  return {{"s", cert.s.members()}, {"components", cert.original_components()}, {"kind", std::string(to_string(cert.kind))}};
}

inline nlohmann::json witness_to_json(const StableWitness& w) {
  return {{"side", std::string(to_string(w.side))}, {"s_c", w.s_c.members()}};
}

inline nlohmann::json hitting_time_to_json(const HittingTime& h) {
  switch (h.status) {
    case HitStatus::Computed: return h.t;
    case HitStatus::Never: return nullptr;
    case HitStatus::BudgetExceeded: return "budget-exceeded";
  }
  return nullptr;
}

inline nlohmann::json trace_to_json(std::size_t n, std::uint64_t seed, const HittingRecord& r) {
  return {{"n", n},
          {"seed", seed},
          {"generator", std::string(kGeneratorVersion)},
          {"tau_conn", hitting_time_to_json(r.conn)},
          {"tau_T", hitting_time_to_json(r.T)},
          {"tau_S", hitting_time_to_json(r.S)},
          {"tau_N", hitting_time_to_json(r.N)},
          {"ordering_holds", ordering_holds(r)},
          {"identity_checks", r.identity_checks}};
}

inline nlohmann::json flex_to_json(const FlexFamily& f, std::size_t samples) {
  const auto thetas = theta_grid(samples);
  nlohmann::json positions = nlohmann::json::array();
  for (double t : thetas) {
    nlohmann::json frame = nlohmann::json::array();
    for (const Vec2& p : sample_positions(f, t)) frame.push_back({p[0], p[1]});
    positions.push_back(std::move(frame));
  }
  const FlexReport rep = verify_flex(f, samples);
  nlohmann::json report = {{"samples", rep.samples},
                           {"max_edge_drift", rep.max_edge_drift},
                           {"max_pair_variation", rep.max_pair_variation},
                           {"varying_pair", {rep.varying_u, rep.varying_v}},
                           {"min_edge_length", rep.min_edge_length},
                           {"edge_length_lower_bound", rep.edge_length_lower_bound}};
  return {{"theta", thetas}, {"positions", std::move(positions)}, {"report", std::move(report)}};
}

}  // namespace nacflex
