#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace nacflex {

// 2-SAT over variables 0..n-1, solved through strongly connected components
// of the implication graph (iterative Tarjan).
class TwoSat {
 public:
  struct Literal {
    std::uint32_t var;
    bool positive;
  };

  static Literal pos(std::uint32_t v) { return {v, true}; }
  static Literal neg(std::uint32_t v) { return {v, false}; }

  explicit TwoSat(std::size_t vars) : vars_(vars), implications_(2 * vars) {}

  std::size_t variable_count() const noexcept { return vars_; }

  void add_clause(Literal a, Literal b) {
    implications_[node(negate(a))].push_back(node(b));
    implications_[node(negate(b))].push_back(node(a));
  }

  void add_unit(Literal a) { add_clause(a, a); }

  std::optional<std::vector<bool>> solve() const {
    const std::size_t nodes = implications_.size();
    std::vector<std::uint32_t> index(nodes, UINT32_MAX), low(nodes, 0), comp(nodes, UINT32_MAX);
    std::vector<std::uint32_t> stack, call;
    std::vector<std::size_t> edge_pos(nodes, 0);
    std::vector<bool> on_stack(nodes, false);
    std::uint32_t counter = 0, comps = 0;

    for (std::uint32_t root = 0; root < nodes; ++root) {
      if (index[root] != UINT32_MAX) continue;
      call.push_back(root);
      while (!call.empty()) {
        const std::uint32_t v = call.back();
        if (edge_pos[v] == 0 && index[v] == UINT32_MAX) {
          index[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = true;
        }
        if (edge_pos[v] < implications_[v].size()) {
          const std::uint32_t w = implications_[v][edge_pos[v]++];
          if (index[w] == UINT32_MAX) {
            call.push_back(w);
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], index[w]);
          }
          continue;
        }
        if (low[v] == index[v]) {
          std::uint32_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = comps;
          } while (w != v);
          ++comps;
        }
        call.pop_back();
        if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
      }
    }

    std::vector<bool> value(vars_);
    for (std::uint32_t v = 0; v < vars_; ++v) {
      const auto t = comp[2 * v], f = comp[2 * v + 1];
      if (t == f) return std::nullopt;
      // Tarjan numbers components in reverse topological order.
      value[v] = t < f;
    }
    return value;
  }

 private:
  static Literal negate(Literal a) { return {a.var, !a.positive}; }
  static std::uint32_t node(Literal a) { return 2 * a.var + (a.positive ? 0 : 1); }

  std::size_t vars_;
  std::vector<std::vector<std::uint32_t>> implications_;
};

}  // namespace nacflex
