#pragma once

#include <chrono>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nacflex/budget.hpp"
#include "nacflex/colouring.hpp"
#include "nacflex/cuts.hpp"
#include "nacflex/error.hpp"
#include "nacflex/graph.hpp"
#include "nacflex/graph_io.hpp"
#include "nacflex/nac_search.hpp"
#include "nacflex/parallel.hpp"
#include "nacflex/process.hpp"
#include "nacflex/random.hpp"

namespace nacflex {

enum class Property { T, S, Sprime, N, NoStableCut, Connected };

constexpr std::string_view to_string(Property p) noexcept {
  switch (p) {
    case Property::T: return "T";
    case Property::S: return "S";
    case Property::Sprime: return "Sprime";
    case Property::N: return "N";
    case Property::NoStableCut: return "NoStableCut";
    case Property::Connected: return "Connected";
  }
  return "?";
}

inline Property parse_property(std::string_view s) {
  for (Property p : {Property::T, Property::S, Property::Sprime, Property::N, Property::NoStableCut, Property::Connected})
    if (s == to_string(p)) return p;
  fail(ErrorKind::InvalidArgument, "unknown property '" + std::string(s) + "'");
}

// Largest n decided by default; beyond this the exact searches are not
// expected to finish near the threshold.
constexpr std::size_t n_ceiling(Property p) noexcept {
  switch (p) {
    case Property::T:
    case Property::Connected: return 100'000;
    default: return 30;
  }
}

// Work limit applied to each graph decision separately.
struct DecisionBudget {
  std::uint64_t max_nodes = 20'000'000;
  std::optional<std::uint64_t> max_ms;

  Budget start() const { return max_ms ? Budget::millis(*max_ms, max_nodes) : Budget::nodes(max_nodes); }
};

// nullopt: the decision ran out of budget.
inline std::optional<bool> decide(Property p, const Graph& g, const DecisionBudget& b) {
  switch (p) {
    case Property::T: return every_vertex_in_triangle(g).all_covered;
    case Property::Connected: return is_connected(g);
    case Property::S:
    case Property::NoStableCut: {
      const auto r = stable_cut_exists(g, b.start());
      if (r.budget_exceeded()) return std::nullopt;
      return r.none();
    }
    case Property::Sprime: {
      const auto r = sprime_holds(g, b.start());
      if (r.status == SearchStatus::BudgetExceeded) return std::nullopt;
      return r.holds;
    }
    case Property::N: {
      if (!is_connected(g)) return false;
      NacSearchOptions opts;
      opts.budget = b.start();
      opts.max_classes = 64;
      const auto r = nac_exists(g, opts);
      if (r.budget_exceeded()) return std::nullopt;
      return r.none();
    }
  }
  return std::nullopt;
}

struct SweepSpec {
  Property property = Property::T;
  std::vector<std::size_t> n_values;
  std::vector<double> c_values;  // multipliers of p_star(n)
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  DecisionBudget budget;
  unsigned workers = 1;
  bool force = false;  // lift the per-property n ceiling

  void validate() const {
    require(trials >= 1, ErrorKind::InvalidArgument, "trials must be at least 1");
    for (double c : c_values) require(c > 0 && std::isfinite(c), ErrorKind::InvalidArgument, "c values must be positive");
    for (std::size_t n : n_values) {
      require(n >= 2, ErrorKind::InvalidArgument, "n must be at least 2");
      if (!force && n > n_ceiling(property))
        fail(ErrorKind::Precondition, "n=" + std::to_string(n) + " exceeds the default ceiling " +
                                          std::to_string(n_ceiling(property)) + " for property " +
                                          std::string(to_string(property)) + " (use force)");
    }
  }
};

struct SweepRow {
  std::size_t n = 0;
  double c = 0;
  double p = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t budget_exceeded = 0;
  double wall_ms = 0;  // summed decision time over trials

  std::size_t failures() const noexcept { return trials - successes - budget_exceeded; }
  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

inline double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

// Trial i at size n draws from RandomSource(master_seed, i).substream(n) and
// shares one uniform per potential edge across all c values.
inline SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();
  SweepResult out;
  const std::size_t cs = spec.c_values.size();
  for (std::size_t n : spec.n_values) {
    std::vector<double> ps(cs);
    for (std::size_t j = 0; j < cs; ++j) ps[j] = std::min(1.0, spec.c_values[j] * p_star(n));

    // outcome[i * cs + j]: 1 success, 0 failure, 2 budget exceeded
    std::vector<std::uint8_t> outcome(spec.trials * cs);
    std::vector<double> millis(spec.trials * cs);
    parallel_for(spec.trials, spec.workers, [&](std::size_t i) {
      RandomSource src = RandomSource(spec.master_seed, i).substream(n);
      const auto graphs = coupled_gnp(n, ps, src);
      for (std::size_t j = 0; j < cs; ++j) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto v = decide(spec.property, graphs[j], spec.budget);
        millis[i * cs + j] = elapsed_ms(t0);
        outcome[i * cs + j] = v ? static_cast<std::uint8_t>(*v) : 2;
      }
    });
    for (std::size_t j = 0; j < cs; ++j) {
      SweepRow row{n, spec.c_values[j], ps[j], spec.trials, 0, 0, 0};
      for (std::size_t i = 0; i < spec.trials; ++i) {
        const auto o = outcome[i * cs + j];
        row.successes += o == 1;
        row.budget_exceeded += o == 2;
        row.wall_ms += millis[i * cs + j];
      }
      out.rows.push_back(row);
    }
  }
  return out;
}

struct HittingRow {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t complete = 0;  // runs with tau_T, tau_S, tau_N all computed
  std::size_t eq_S = 0;      // tau_S == tau_T
  std::size_t eq_N = 0;      // tau_N == tau_T
  std::size_t ordering_violations = 0;
  std::size_t budget_exceeded = 0;
  std::uint64_t identity_checks = 0;
  double wall_ms = 0;

  double frac_S() const { return complete ? static_cast<double>(eq_S) / static_cast<double>(complete) : 0.0; }
  double frac_N() const { return complete ? static_cast<double>(eq_N) / static_cast<double>(complete) : 0.0; }
  double se_S() const { return binomial_se(frac_S()); }
  double se_N() const { return binomial_se(frac_N()); }

 private:
  double binomial_se(double f) const {
    return complete ? std::sqrt(f * (1 - f) / static_cast<double>(complete)) : 0.0;
  }
};

struct HittingSpec {
  std::vector<std::size_t> n_values;
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  DecisionBudget budget;
  unsigned workers = 1;
  bool force = false;
};

// Run i at size n uses RandomSource(master_seed, i).substream(n).
inline std::vector<HittingRow> hitting_equality_experiment(const HittingSpec& spec,
                                                           std::vector<std::vector<HittingRecord>>* records = nullptr) {
  require(spec.trials >= 1, ErrorKind::InvalidArgument, "trials must be at least 1");
  for (std::size_t n : spec.n_values)
    if (!spec.force && n > n_ceiling(Property::S))
      fail(ErrorKind::Precondition, "n=" + std::to_string(n) + " exceeds the default ceiling for hitting times (use force)");
  std::vector<HittingRow> rows;
  if (records) records->clear();
  for (std::size_t n : spec.n_values) {
    std::vector<HittingRecord> recs(spec.trials);
    std::vector<double> millis(spec.trials);
    parallel_for(spec.trials, spec.workers, [&](std::size_t i) {
      const auto t0 = std::chrono::steady_clock::now();
      RandomSource src = RandomSource(spec.master_seed, i).substream(n);
      const ProcessTrace trace = process(n, src);
      HittingOptions opts;
      opts.budget = Budget::nodes(spec.budget.max_nodes);
      if (spec.budget.max_ms) opts.budget = spec.budget.start();
      recs[i] = hitting_times(trace, opts);
      millis[i] = elapsed_ms(t0);
    });
    HittingRow row;
    row.n = n;
    row.trials = spec.trials;
    for (std::size_t i = 0; i < spec.trials; ++i) {
      const auto& r = recs[i];
      row.wall_ms += millis[i];
      row.identity_checks += r.identity_checks;
      if (!ordering_holds(r)) ++row.ordering_violations;
      if (r.S.status == HitStatus::BudgetExceeded || r.N.status == HitStatus::BudgetExceeded) {
        ++row.budget_exceeded;
        continue;
      }
      if (!r.T.computed() || !r.S.computed() || !r.N.computed()) continue;
      ++row.complete;
      row.eq_S += r.S.t == r.T.t;
      row.eq_N += r.N.t == r.T.t;
    }
    rows.push_back(row);
    if (records) records->push_back(std::move(recs));
  }
  return rows;
}

struct RegularNacRow {
  std::size_t trial = 0;
  std::size_t n = 0, k = 0;
  std::size_t x_size = 0;
  std::size_t x_bound = 0;  // ceil(n / (k^3 - k^2 + k + 1))
  std::size_t s_size = 0;
  std::size_t colourings_checked = 0;
  std::size_t colourings_nac = 0;
  std::uint64_t rejections = 0;
};

namespace detail {

// Greedy maximal set of vertices at pairwise distance >= 4, scanning 0..n-1.
inline std::vector<Vertex> spread_set(const Graph& g, std::size_t radius) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> dist(n, SIZE_MAX);
  std::vector<bool> blocked(n, false);
  std::vector<Vertex> chosen, frontier, next;
  for (Vertex v = 0; v < n; ++v) {
    if (blocked[v]) continue;
    chosen.push_back(v);
    // block the closed ball of radius 3 around v
    frontier = {v};
    std::vector<Vertex> touched{v};
    dist[v] = 0;
    blocked[v] = true;
    for (std::size_t d = 1; d < radius && !frontier.empty(); ++d) {
      next.clear();
      for (Vertex u : frontier)
        for (Vertex w : g.neighbours(u))
          if (dist[w] == SIZE_MAX) {
            dist[w] = d;
            blocked[w] = true;
            touched.push_back(w);
            next.push_back(w);
          }
      frontier.swap(next);
    }
    for (Vertex u : touched) dist[u] = SIZE_MAX;
  }
  return chosen;
}

inline bool neighbourhood_stable(const Graph& g, Vertex v) {
  const auto nb = g.neighbours(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (g.has_edge(nb[i], nb[j])) return false;
  return true;
}

}  // namespace detail

inline constexpr std::size_t kRegularSubsetSamples = 100;

// Random k-regular graph; X is a greedy maximal set at pairwise distance
// >= 4 and S its members with stable neighbourhoods. For a nonempty T in S,
// edges meeting T are red and all others blue. All nonempty subsets are
// tried when there are at most 100 of them, otherwise 100 random ones.
inline std::vector<RegularNacRow> regular_nac_lower_bound(std::size_t n, std::size_t k, std::size_t trials,
                                                          std::uint64_t master_seed, unsigned workers = 1) {
  require((n * k) % 2 == 0, ErrorKind::Parity, "n*k must be even");
  require(k >= 1 && k < n, ErrorKind::InvalidArgument, "need 1 <= k < n");
  const std::size_t denom = k * k * k - k * k + k + 1;
  std::vector<RegularNacRow> rows(trials);
  parallel_for(trials, workers, [&](std::size_t i) {
    RandomSource src = RandomSource(master_seed, i).substream(n * 1'000'003ull + k);
    const auto sample = regular_configuration(n, k, src);
    const Graph& g = sample.graph;
    RegularNacRow row;
    row.trial = i;
    row.n = n;
    row.k = k;
    row.rejections = sample.rejections;
    row.x_bound = (n + denom - 1) / denom;
    const auto x = detail::spread_set(g, 4);
    row.x_size = x.size();
    std::vector<Vertex> s;
    for (Vertex v : x)
      if (detail::neighbourhood_stable(g, v)) s.push_back(v);
    row.s_size = s.size();

    auto check = [&](const std::vector<bool>& pick) {
      std::vector<bool> in_t(n, false);
      for (std::size_t j = 0; j < s.size(); ++j)
        if (pick[j]) in_t[s[j]] = true;
      const auto c = EdgeColouring::red_where(g, [&](EdgeId e) { return in_t[g.edge(e).u] || in_t[g.edge(e).v]; });
      ++row.colourings_checked;
      row.colourings_nac += nac_check(c).is_nac;
    };
    std::vector<bool> pick(s.size());
    if (s.size() < 64 && (std::uint64_t{1} << s.size()) - 1 <= kRegularSubsetSamples) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s.size()); ++mask) {
        for (std::size_t j = 0; j < s.size(); ++j) pick[j] = (mask >> j) & 1;
        check(pick);
      }
    } else {
      for (std::size_t sample_no = 0; sample_no < kRegularSubsetSamples;) {
        bool any = false;
        for (std::size_t j = 0; j < s.size(); ++j) any |= (pick[j] = src.next() & 1);
        if (!any) continue;
        check(pick);
        ++sample_no;
      }
    }
    rows[i] = row;
  });
  return rows;
}

// ---- emission ----

inline std::string format_double(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

inline constexpr std::string_view kSweepCsvHeader = "n,c,p,trials,successes,budget_exceeded,wall_ms";

enum class Format { Csv, Json };

inline Format parse_format(std::string_view s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  fail(ErrorKind::InvalidArgument, "unknown format '" + std::string(s) + "' (csv or json)");
}

inline std::string sweep_to_csv(const SweepResult& r, bool with_wall = true) {
  std::string out(with_wall ? kSweepCsvHeader : kSweepCsvHeader.substr(0, kSweepCsvHeader.rfind(',')));
  out += '\n';
  for (const auto& row : r.rows) {
    out += std::to_string(row.n) + ',' + format_double(row.c) + ',' + format_double(row.p) + ',' +
           std::to_string(row.trials) + ',' + std::to_string(row.successes) + ',' + std::to_string(row.budget_exceeded);
    if (with_wall) out += ',' + format_double(row.wall_ms);
    out += '\n';
  }
  return out;
}

inline nlohmann::json sweep_to_json(const SweepResult& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"n", row.n},
                    {"c", row.c},
                    {"p", row.p},
                    {"trials", row.trials},
                    {"successes", row.successes},
                    {"budget_exceeded", row.budget_exceeded},
                    {"wall_ms", row.wall_ms}});
  return {{"rows", rows}};
}

inline SweepResult sweep_from_json(const nlohmann::json& j) {
  SweepResult r;
  try {
    for (const auto& row : j.at("rows"))
      r.rows.push_back({row.at("n").get<std::size_t>(), row.at("c").get<double>(), row.at("p").get<double>(),
                        row.at("trials").get<std::size_t>(), row.at("successes").get<std::size_t>(),
                        row.at("budget_exceeded").get<std::size_t>(), row.at("wall_ms").get<double>()});
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed sweep JSON: ") + e.what());
  }
  return r;
}

inline double parse_double(const std::string& s) {
  double x = 0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), x);
  require(r.ec == std::errc{} && r.ptr == s.data() + s.size(), ErrorKind::Parse, "bad number '" + s + "'");
  return x;
}

inline SweepResult sweep_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  require(static_cast<bool>(std::getline(in, line)) && line == kSweepCsvHeader, ErrorKind::Parse,
          "sweep CSV must start with the fixed header");
  SweepResult r;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::istringstream fields(line);
    for (std::string tok; std::getline(fields, tok, ',');) f.push_back(tok);
    require(f.size() == 7, ErrorKind::Parse, "sweep CSV row needs 7 fields");
    auto u = [&](const std::string& s) { return static_cast<std::size_t>(detail::parse_uint(s, 0)); };
    r.rows.push_back({u(f[0]), parse_double(f[1]), parse_double(f[2]), u(f[3]), u(f[4]), u(f[5]), parse_double(f[6])});
  }
  return r;
}

inline std::string emit_text(const SweepResult& r, Format fmt) {
  return fmt == Format::Csv ? sweep_to_csv(r) : sweep_to_json(r).dump(2) + "\n";
}

inline void emit(const SweepResult& r, Format fmt, const std::string& path) { write_text_file(path, emit_text(r, fmt)); }

inline constexpr std::string_view kHittingCsvHeader =
    "n,trials,complete,eq_S_T,frac_S_T,se_S_T,eq_N_T,frac_N_T,se_N_T,ordering_violations,budget_exceeded,"
    "identity_checks,wall_ms";

inline std::string hitting_to_csv(const std::vector<HittingRow>& rows, bool with_wall = true) {
  std::string out(with_wall ? kHittingCsvHeader : kHittingCsvHeader.substr(0, kHittingCsvHeader.rfind(',')));
  out += '\n';
  for (const auto& r : rows) {
    out += std::to_string(r.n) + ',' + std::to_string(r.trials) + ',' + std::to_string(r.complete) + ',' +
           std::to_string(r.eq_S) + ',' + format_double(r.frac_S()) + ',' + format_double(r.se_S()) + ',' +
           std::to_string(r.eq_N) + ',' + format_double(r.frac_N()) + ',' + format_double(r.se_N()) + ',' +
           std::to_string(r.ordering_violations) + ',' + std::to_string(r.budget_exceeded) + ',' +
           std::to_string(r.identity_checks);
    if (with_wall) out += ',' + format_double(r.wall_ms);
    out += '\n';
  }
  return out;
}

inline nlohmann::json hitting_to_json(const std::vector<HittingRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows)
    arr.push_back({{"n", r.n},
                   {"trials", r.trials},
                   {"complete", r.complete},
                   {"eq_S_T", r.eq_S},
                   {"frac_S_T", r.frac_S()},
                   {"se_S_T", r.se_S()},
                   {"eq_N_T", r.eq_N},
                   {"frac_N_T", r.frac_N()},
                   {"se_N_T", r.se_N()},
                   {"ordering_violations", r.ordering_violations},
                   {"budget_exceeded", r.budget_exceeded},
                   {"identity_checks", r.identity_checks},
                   {"wall_ms", r.wall_ms}});
  return {{"rows", arr}};
}

inline constexpr std::string_view kRegularCsvHeader =
    "trial,n,k,x_size,x_bound,s_size,colourings_checked,colourings_nac,rejections";

inline std::string regular_to_csv(const std::vector<RegularNacRow>& rows) {
  std::string out(kRegularCsvHeader);
  out += '\n';
  for (const auto& r : rows)
    out += std::to_string(r.trial) + ',' + std::to_string(r.n) + ',' + std::to_string(r.k) + ',' +
           std::to_string(r.x_size) + ',' + std::to_string(r.x_bound) + ',' + std::to_string(r.s_size) + ',' +
           std::to_string(r.colourings_checked) + ',' + std::to_string(r.colourings_nac) + ',' +
           std::to_string(r.rejections) + '\n';
  return out;
}

inline nlohmann::json regular_to_json(const std::vector<RegularNacRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows)
    arr.push_back({{"trial", r.trial},
                   {"n", r.n},
                   {"k", r.k},
                   {"x_size", r.x_size},
                   {"x_bound", r.x_bound},
                   {"s_size", r.s_size},
                   {"colourings_checked", r.colourings_checked},
                   {"colourings_nac", r.colourings_nac},
                   {"rejections", r.rejections}});
  return {{"rows", arr}};
}

}  // namespace nacflex
