// nacflex command-line tool. Results go to stdout as JSON (or the sweep
// formats for `experiment`) unless --out is given.
//
// Exit codes: 0 success, 2 bad arguments or violated precondition, 3 I/O.

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nacflex/nacflex.hpp"

namespace {

using namespace nacflex;
using nlohmann::json;

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) std::cout << text;
    else write_text_file(path, text);
  }
  void write(const json& j) const { write(j.dump(2) + "\n"); }
};

struct LoadedColouring {
  Graph graph;
  std::optional<EdgeColouring> colouring;
};

// The colouring refers to the graph stored next to it; keep the holder alive.
std::unique_ptr<LoadedColouring> load_colouring(const std::string& path) {
  const json j = parse_json_text(read_text_file(path), path);
  auto out = std::make_unique<LoadedColouring>();
  try {
    out->graph = graph_from_json(j.at("graph"));
  } catch (const json::exception& ex) {
    fail(ErrorKind::Parse, path + ": " + ex.what());
  }
  out->colouring.emplace(colouring_from_json(j, out->graph));
  return out;
}

Budget budget_from(std::uint64_t nodes, std::uint64_t ms) { return ms ? Budget::millis(ms, nodes) : Budget::nodes(nodes); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NAC-colourings, stable cuts, random graph processes and flexible realisations"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--out", out.path, "write the result here instead of stdout");

  // ---- nac ----
  auto* nac = app.add_subcommand("nac", "NAC-colourings");
  nac->require_subcommand(1);
  std::string file;
  std::uint64_t cap = 1'000'000, nodes = 100'000'000, budget_ms = 0;
  std::uint32_t max_classes = 26;
  bool force = false;
  std::size_t pad = 0;
  bool all_witnesses = false;
  auto search_flags = [&](CLI::App* sub) {
    sub->add_option("--budget", nodes, "search node limit");
    sub->add_option("--budget-ms", budget_ms, "wall-clock limit in ms (0: none)");
    sub->add_option("--max-classes", max_classes, "refuse above this many triangle classes");
    sub->add_flag("--force", force, "search regardless of the class count");
  };
  auto* nac_check_cmd = nac->add_subcommand("check", "check a colouring file");
  nac_check_cmd->add_option("colouring", file)->required();
  auto* nac_count = nac->add_subcommand("count", "count NAC-colourings of a graph");
  nac_count->add_option("graph", file)->required();
  search_flags(nac_count);
  auto* nac_find = nac->add_subcommand("find", "find one NAC-colouring");
  nac_find->add_option("graph", file)->required();
  search_flags(nac_find);
  auto* nac_enum = nac->add_subcommand("enumerate", "list NAC-colourings");
  nac_enum->add_option("graph", file)->required();
  nac_enum->add_option("--cap", cap, "stop after this many colourings");
  search_flags(nac_enum);
  auto* nac_witness = nac->add_subcommand("stable-witness", "stable witnesses of a NAC-colouring");
  nac_witness->add_option("colouring", file)->required();
  nac_witness->add_flag("--all", all_witnesses, "list every canonical witness");
  nac_witness->add_option("--cap", cap, "at most this many witnesses with --all");
  nac_witness->add_option("--pad-isolated", pad,
                          "pad canonical witnesses (which never contain isolated vertices) with the lowest "
                          "isolated vertices up to this size; witnesses that cannot reach it are dropped");

  // ---- cut ----
  auto* cut = app.add_subcommand("cut", "stable cuts");
  cut->require_subcommand(1);
  std::vector<CLI::App*> cut_cmds;
  for (const char* name : {"stable", "firm", "sprime"}) {
    auto* sub = cut->add_subcommand(name, std::string("decide ") + name);
    sub->add_option("graph", file)->required();
    sub->add_option("--budget", nodes, "search node limit");
    sub->add_option("--budget-ms", budget_ms, "wall-clock limit in ms (0: none)");
    cut_cmds.push_back(sub);
  }

  // ---- rand ----
  auto* rnd = app.add_subcommand("rand", "random graphs");
  rnd->require_subcommand(1);
  std::size_t n = 0, k = 0;
  double p = 0;
  std::uint64_t m = 0, seed = 0, stream = 0;
  std::string graph_format = "json";
  auto rand_common = [&](CLI::App* sub) {
    sub->add_option("--n", n)->required();
    sub->add_option("--seed", seed, "master seed");
    sub->add_option("--stream", stream, "stream id");
    sub->add_option("--format", graph_format, "json or edges")->check(CLI::IsMember({"json", "edges"}));
  };
  auto* rand_gnp = rnd->add_subcommand("gnp", "G(n,p)");
  rand_common(rand_gnp);
  rand_gnp->add_option("--p", p)->required();
  auto* rand_gnm = rnd->add_subcommand("gnm", "G(n;m)");
  rand_common(rand_gnm);
  rand_gnm->add_option("--m", m)->required();
  auto* rand_reg = rnd->add_subcommand("regular", "random k-regular graph");
  rand_common(rand_reg);
  rand_reg->add_option("--k", k)->required();

  // ---- process ----
  auto* proc = app.add_subcommand("process", "random graph process");
  proc->require_subcommand(1);
  auto* proc_trace = proc->add_subcommand("trace", "hitting times of one process run");
  proc_trace->add_option("--n", n)->required();
  proc_trace->add_option("--seed", seed);
  proc_trace->add_option("--stream", stream);
  std::uint64_t decision_nodes = 20'000'000;
  proc_trace->add_option("--budget", decision_nodes, "node limit per decision");

  // ---- flex ----
  auto* flex = app.add_subcommand("flex", "flexible realisations");
  flex->require_subcommand(1);
  auto* flex_build = flex->add_subcommand("build", "motion from a NAC-colouring");
  flex_build->add_option("colouring", file)->required();
  flex_build->add_option("--seed", seed);
  std::size_t samples = 64;
  flex_build->add_option("--samples", samples)->check(CLI::PositiveNumber);

  // ---- experiment ----
  auto* exp = app.add_subcommand("experiment", "Monte Carlo experiments");
  exp->require_subcommand(1);
  std::vector<std::size_t> n_values;
  std::vector<double> c_values;
  std::size_t trials = 1;
  unsigned workers = 1;
  std::string format = "csv", property = "T";
  auto exp_common = [&](CLI::App* sub) {
    sub->add_option("--n", n_values, "vertex counts (comma separated)")->required()->delimiter(',');
    sub->add_option("--trials", trials)->required();
    sub->add_option("--seed", seed, "master seed");
    sub->add_option("--budget", decision_nodes, "node limit per decision");
    sub->add_option("--budget-ms", budget_ms, "wall-clock limit per decision in ms (0: none)");
    sub->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--workers", workers, "worker threads");
    sub->add_flag("--force", force, "lift the per-property n ceilings");
  };
  auto* exp_sweep = exp->add_subcommand("sweep", "threshold sweep over c * p_star(n)");
  exp_common(exp_sweep);
  exp_sweep->add_option("--c", c_values, "multipliers of p_star(n)")->required()->delimiter(',');
  exp_sweep->add_option("--property", property, "T, S, Sprime, N, NoStableCut or Connected");
  auto* exp_hit = exp->add_subcommand("hitting", "hitting-time equality statistics");
  exp_common(exp_hit);
  auto* exp_reg = exp->add_subcommand("regular-nac", "NAC-colourings of random regular graphs");
  exp_common(exp_reg);
  exp_reg->add_option("--k", k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    NacSearchOptions nac_opts;
    nac_opts.budget = budget_from(nodes, budget_ms);
    nac_opts.max_classes = max_classes;
    nac_opts.force = force;

    if (nac_check_cmd->parsed()) {
      const auto lc = load_colouring(file);
      const auto v = nac_check(*lc->colouring);
      json j = {{"is_nac", v.is_nac}};
      if (v.failure == NacFailure::NotSurjective) j["failure"] = "not-surjective";
      if (v.cycle) {
        j["failure"] = "almost-monochromatic-cycle";
        const Edge e = lc->graph.edge(v.cycle->edge);
        j["cycle"] = {{"edge", {e.u, e.v}},
                      {"edge_colour", std::string(to_string(v.cycle->edge_colour))},
                      {"path", v.cycle->path_vertices}};
      }
      out.write(j);
    } else if (nac_count->parsed() || nac_enum->parsed()) {
      const Graph g = load_graph(file);
      const auto r = nac_enumerate(g, nac_enum->parsed() ? cap : UINT64_MAX, nac_opts);
      json j = {{"count", r.count}, {"complete", r.complete}, {"cap_exceeded", r.cap_exceeded}, {"nodes", r.nodes}};
      if (nac_enum->parsed()) {
        json list = json::array();
        for (const auto& c : r.colourings) list.push_back(colouring_to_json(c)["red"]);
        j["red_sets"] = std::move(list);
      }
      out.write(j);
      if (!r.complete && !r.cap_exceeded) return 2;
    } else if (nac_find->parsed()) {
      const Graph g = load_graph(file);
      const auto r = nac_exists(g, nac_opts);
      json j = {{"status", std::string(to_string(r.status))}, {"nodes", r.nodes}};
      if (r.value) j["colouring"] = colouring_to_json(*r.value);
      out.write(j);
    } else if (nac_witness->parsed()) {
      const auto lc = load_colouring(file);
      auto ws = stable_witnesses(*lc->colouring, all_witnesses ? WitnessMode::All : WitnessMode::First, cap);
      json list = json::array();
      for (const auto& w : ws) {
        if (pad == 0) list.push_back(witness_to_json(w));
        else if (auto padded = pad_with_isolated(lc->graph, w, pad)) list.push_back(witness_to_json(*padded));
      }
      out.write(json{{"stable", !ws.empty()}, {"witnesses", std::move(list)}});
    } else if (cut->parsed()) {
      const Graph g = load_graph(file);
      const Budget b = budget_from(nodes, budget_ms);
      SearchResult<CutCertificate> r;
      json j;
      if (cut_cmds[0]->parsed()) r = stable_cut_exists(g, b);
      else if (cut_cmds[1]->parsed()) r = firm_cut_exists(g, b);
      if (cut_cmds[2]->parsed()) {
        auto s = sprime_holds(g, b);
        j = {{"status", std::string(to_string(s.status))}, {"holds", s.holds}, {"nodes", s.nodes}};
        if (s.violation) j["certificate"] = certificate_to_json(*s.violation);
      } else {
        j = {{"status", std::string(to_string(r.status))}, {"nodes", r.nodes}};
        if (r.value) j["certificate"] = certificate_to_json(*r.value);
      }
      out.write(j);
    } else if (rnd->parsed()) {
      RandomSource src(seed, stream);
      Graph g;
      json extra = json::object();
      if (rand_gnp->parsed()) g = gnp(n, p, src);
      else if (rand_gnm->parsed()) g = gnm(n, m, src);
      else {
        auto s = regular_configuration(n, k, src);
        extra["rejections"] = s.rejections;
        g = std::move(s.graph);
      }
      if (graph_format == "edges") {
        out.write(to_edge_list(g));
      } else {
        json j = graph_to_json(g);
        j["seed"] = seed;
        j["stream"] = stream;
        j["generator"] = std::string(kGeneratorVersion);
        j.update(extra);
        out.write(j);
      }
    } else if (proc_trace->parsed()) {
      RandomSource src(seed, stream);
      const auto trace = process(n, src);
      HittingOptions opts;
      opts.budget = Budget::nodes(decision_nodes);
      out.write(trace_to_json(n, seed, hitting_times(trace, opts)));
    } else if (flex_build->parsed()) {
      const auto lc = load_colouring(file);
      RandomSource src(seed, 0);
      const auto f = build_flex(lc->graph, *lc->colouring, src);
      out.write(flex_to_json(f, samples));
    } else if (exp->parsed()) {
      DecisionBudget db{decision_nodes, budget_ms ? std::optional<std::uint64_t>(budget_ms) : std::nullopt};
      const Format fmt = parse_format(format);
      if (exp_sweep->parsed()) {
        SweepSpec spec{parse_property(property), n_values, c_values, trials, seed, db, workers, force};
        out.write(emit_text(run_sweep(spec), fmt));
      } else if (exp_hit->parsed()) {
        HittingSpec spec{n_values, trials, seed, db, workers, force};
        const auto rows = hitting_equality_experiment(spec);
        out.write(fmt == Format::Csv ? hitting_to_csv(rows) : hitting_to_json(rows).dump(2) + "\n");
      } else {
        std::vector<RegularNacRow> rows;
        for (std::size_t nv : n_values) {
          auto part = regular_nac_lower_bound(nv, k, trials, seed, workers);
          rows.insert(rows.end(), part.begin(), part.end());
        }
        out.write(fmt == Format::Csv ? regular_to_csv(rows) : regular_to_json(rows).dump(2) + "\n");
      }
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::Io ? 3 : 2;
  }
  return 0;
}
