#pragma once

#include <charconv>
#include <fstream>
#include <iosfwd>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "nacflex/error.hpp"
#include "nacflex/graph.hpp"

namespace nacflex {

// Edge-list text format:
//   n m
//   u v      (m lines, decimal vertex ids in 0..n-1)
// Blank lines are ignored and '#' starts a comment running to end of line.
// write_edge_list emits the canonical form, so text written by it reads back
// and re-writes byte for byte.

namespace detail {

inline std::vector<std::vector<std::string>> tokenize_lines(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(std::move(tok));
    if (!tokens.empty()) rows.push_back(std::move(tokens));
  }
  return rows;
}

inline std::uint64_t parse_uint(const std::string& tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    fail(ErrorKind::Parse, "expected non-negative integer, got '" + tok + "' (record " + std::to_string(line) + ")");
  return value;
}

inline std::pair<std::size_t, std::size_t> parse_header(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) fail(ErrorKind::Parse, "missing 'n m' header");
  if (rows[0].size() != 2) fail(ErrorKind::Parse, "header must be 'n m'");
  const auto n = parse_uint(rows[0][0], 0);
  const auto m = parse_uint(rows[0][1], 0);
  if (n > UINT32_MAX) fail(ErrorKind::Parse, "vertex count too large");
  if (rows.size() - 1 != m)
    fail(ErrorKind::Parse, "header declares " + std::to_string(m) + " edges, found " + std::to_string(rows.size() - 1));
  return {static_cast<std::size_t>(n), static_cast<std::size_t>(m)};
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
  const auto rows = detail::tokenize_lines(in);
  const auto [n, m] = detail::parse_header(rows);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != 2) fail(ErrorKind::Parse, "edge record " + std::to_string(i) + " must be 'u v'");
    const auto u = detail::parse_uint(rows[i][0], i);
    const auto v = detail::parse_uint(rows[i][1], i);
    if (u >= n || v >= n) fail(ErrorKind::InvalidVertex, "edge record " + std::to_string(i) + " has endpoint >= n");
    if (u == v) fail(ErrorKind::InvalidGraph, "self-loop in edge record " + std::to_string(i));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(n, std::move(edges));
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

struct LabelledGraph {
  Graph graph;
  std::vector<std::string> labels;  // labels[id] is the original name of vertex id
};

// Same layout as the edge list, but edge endpoints may be arbitrary tokens.
// Tokens are compacted to ids 0.. in order of first appearance. When fewer
// than n distinct tokens occur, the remaining ids are isolated vertices with
// empty labels.
inline LabelledGraph read_labelled_edge_list(std::istream& in) {
  const auto rows = detail::tokenize_lines(in);
  const auto [n, m] = detail::parse_header(rows);
  LabelledGraph out;
  std::unordered_map<std::string, Vertex> ids;
  auto id_of = [&](const std::string& tok) {
    auto [it, inserted] = ids.try_emplace(tok, static_cast<Vertex>(out.labels.size()));
    if (inserted) out.labels.push_back(tok);
    return it->second;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != 2) fail(ErrorKind::Parse, "edge record " + std::to_string(i) + " must be 'u v'");
    const Vertex a = id_of(rows[i][0]);
    const Vertex b = id_of(rows[i][1]);
    if (a == b) fail(ErrorKind::InvalidGraph, "self-loop at '" + rows[i][0] + "'");
    edges.emplace_back(a, b);
  }
  if (out.labels.size() > n)
    fail(ErrorKind::Parse, "found " + std::to_string(out.labels.size()) + " distinct labels but n=" + std::to_string(n));
  out.labels.resize(n);
  out.graph = Graph(n, std::move(edges));
  return out;
}

// JSON form: {"n": int, "edges": [[u,v],...]} with edges in canonical order.
inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline nlohmann::json graph_to_json(const LabelledGraph& lg) {
  auto j = graph_to_json(lg.graph);
  j["labels"] = lg.labels;
  return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 0 || n > UINT32_MAX) fail(ErrorKind::Parse, "bad vertex count");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) fail(ErrorKind::Parse, "edge must be a [u,v] pair");
      const auto u = e[0].get<std::int64_t>();
      const auto v = e[1].get<std::int64_t>();
      if (u < 0 || v < 0 || u >= n || v >= n) fail(ErrorKind::InvalidVertex, "edge endpoint out of range");
      if (u == v) fail(ErrorKind::InvalidGraph, "self-loop at vertex " + std::to_string(u));
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph(static_cast<std::size_t>(n), std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorKind::Parse, std::string("graph JSON: ") + ex.what());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Io, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) fail(ErrorKind::Io, "write failed for '" + path + "'");
}

inline nlohmann::json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    fail(ErrorKind::Parse, origin + ": " + ex.what());
  }
}

// Loads a graph file: JSON when the name ends in .json, edge list otherwise.
inline Graph load_graph(const std::string& path) {
  const std::string text = read_text_file(path);
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
    return graph_from_json(parse_json_text(text, path));
  std::istringstream in(text);
  return read_edge_list(in);
}

}  // namespace nacflex
