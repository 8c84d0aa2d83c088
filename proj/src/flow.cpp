#include "semireach/flow.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <stdexcept>

namespace semireach::solvers {

namespace {

void validate(const FlowInstance& inst) {
  if (inst.source >= inst.num_nodes || inst.target >= inst.num_nodes) {
    throw std::invalid_argument("flow_reach: source or target out of range");
  }
  for (const FlowEdge& e : inst.edges) {
    if (e.from >= inst.num_nodes || e.to >= inst.num_nodes) {
      throw std::invalid_argument("flow_reach: edge endpoint out of range");
    }
    if (e.weight.size() != inst.goal.size()) {
      throw std::invalid_argument("flow_reach: weight vector has wrong length");
    }
  }
}

// Connected components (ignoring direction) of the support.
std::vector<std::size_t> components(const FlowInstance& inst, const IntegerVec& usage) {
  std::vector<std::size_t> parent(inst.num_nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    if (usage[e] > 0) {
      parent[find(inst.edges[e].from)] = find(inst.edges[e].to);
    }
  }
  std::vector<std::size_t> comp(inst.num_nodes);
  for (std::size_t v = 0; v < inst.num_nodes; ++v) {
    comp[v] = find(v);
  }
  return comp;
}

// Breadth-first over (node, partial weight) with partial weights kept in a
// window around the goal. Exhausting the window proves nothing.
std::optional<std::vector<std::size_t>> probe_walk(const FlowInstance& inst, std::size_t max_states) {
  const std::size_t d = inst.goal.size();
  long wmax = 0;
  for (const FlowEdge& e : inst.edges) {
    for (const Integer& w : e.weight) {
      if (!w.fits_slong_p() || abs(w) > 1000000) return std::nullopt;
      wmax = std::max(wmax, std::abs(w.get_si()));
    }
  }
  std::vector<long> goal;
  for (const Integer& g : inst.goal) {
    if (!g.fits_slong_p() || abs(g) > 1000000) return std::nullopt;
    goal.push_back(g.get_si());
  }
  struct KeyHash {
    std::size_t operator()(const std::vector<long>& k) const {
      std::size_t h = 0;
      for (long x : k) h = h * 1000003u ^ std::hash<long>{}(x);
      return h;
    }
  };
  std::vector<std::vector<long>> keys;
  std::vector<std::pair<std::size_t, std::size_t>> parent;  // (state, edge)
  std::unordered_map<std::vector<long>, std::size_t, KeyHash> seen;
  std::vector<std::vector<std::size_t>> out(inst.num_nodes);
  for (std::size_t e = 0; e < inst.edges.size(); ++e) out[inst.edges[e].from].push_back(e);

  std::vector<long> start(d + 1, 0);
  start[d] = static_cast<long>(inst.source);
  keys.push_back(start);
  parent.emplace_back(0, 0);
  seen.emplace(start, 0);
  auto unwind = [&](std::size_t s, std::size_t last) {
    std::vector<std::size_t> walk{last};
    for (; s != 0; s = parent[s].first) walk.push_back(parent[s].second);
    std::reverse(walk.begin(), walk.end());
    return walk;
  };
  for (std::size_t head = 0; head < keys.size(); ++head) {
    const std::vector<long> cur = keys[head];
    for (std::size_t e : out[static_cast<std::size_t>(cur[d])]) {
      const FlowEdge& edge = inst.edges[e];
      std::vector<long> nxt(d + 1);
      bool inside = true;
      for (std::size_t k = 0; k < d; ++k) {
        nxt[k] = cur[k] + edge.weight[k].get_si();
        if (std::abs(nxt[k] - goal[k]) > std::abs(goal[k]) + 2 * wmax) inside = false;
      }
      nxt[d] = static_cast<long>(edge.to);
      if (edge.to == inst.target && std::equal(goal.begin(), goal.end(), nxt.begin())) {
        return unwind(head, e);
      }
      if (!inside || seen.count(nxt)) continue;
      if (keys.size() >= max_states) return std::nullopt;
      seen.emplace(nxt, keys.size());
      keys.push_back(std::move(nxt));
      parent.emplace_back(head, e);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<std::size_t>> euler_walk(const FlowInstance& inst, const IntegerVec& usage) {
  const std::size_t n = inst.num_nodes;
  std::vector<Integer> balance(n, Integer(0));
  Integer total = 0;
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    if (usage[e] < 0) {
      return std::nullopt;
    }
    if (usage[e] > 0) {
      balance[inst.edges[e].from] += usage[e];
      balance[inst.edges[e].to] -= usage[e];
      total += usage[e];
      out[inst.edges[e].from].push_back(e);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    Integer expect = 0;
    if (inst.source != inst.target) {
      if (v == inst.source) expect += 1;
      if (v == inst.target) expect -= 1;
    }
    if (balance[v] != expect) {
      return std::nullopt;
    }
  }
  if (total == 0) {
    return std::vector<std::size_t>{};
  }
  // Hierholzer with multiplicities.
  IntegerVec left = usage;
  std::vector<std::size_t> next(n, 0);
  std::vector<std::size_t> stack_nodes{inst.source};
  std::vector<std::size_t> stack_edges;
  std::vector<std::size_t> walk;
  while (!stack_nodes.empty()) {
    const std::size_t v = stack_nodes.back();
    while (next[v] < out[v].size() && left[out[v][next[v]]] == 0) {
      ++next[v];
    }
    if (next[v] < out[v].size()) {
      const std::size_t e = out[v][next[v]];
      left[e] -= 1;
      stack_nodes.push_back(inst.edges[e].to);
      stack_edges.push_back(e);
    } else {
      stack_nodes.pop_back();
      if (!stack_edges.empty()) {
        walk.push_back(stack_edges.back());
        stack_edges.pop_back();
      }
    }
  }
  if (Integer(static_cast<unsigned long>(walk.size())) != total) {
    return std::nullopt;  // some used edge is not reachable from the source
  }
  return std::vector<std::size_t>(walk.rbegin(), walk.rend());
}

std::optional<FlowSolution> flow_reach(const FlowInstance& inst, const FlowOptions& opt) {
  validate(inst);
  const std::size_t m = inst.edges.size();
  if (m == 0) {
    return std::nullopt;
  }
  if (opt.probe_states > 0) {
    if (auto walk = probe_walk(inst, opt.probe_states)) {
      FlowSolution sol;
      sol.usage.assign(m, Integer(0));
      for (std::size_t e : *walk) sol.usage[e] += 1;
      if (walk->size() <= opt.max_walk_length) sol.walk = std::move(*walk);
      return sol;
    }
  }
  IlpSystem base(m);
  for (std::size_t v = 0; v < inst.num_nodes; ++v) {
    IntegerVec row(m, Integer(0));
    for (std::size_t e = 0; e < m; ++e) {
      if (inst.edges[e].from == v) row[e] += 1;
      if (inst.edges[e].to == v) row[e] -= 1;
    }
    Integer rhs = 0;
    if (inst.source != inst.target) {
      if (v == inst.source) rhs = 1;
      if (v == inst.target) rhs = -1;
    }
    base.add(std::move(row), Relation::Eq, rhs);
  }
  for (std::size_t k = 0; k < inst.goal.size(); ++k) {
    IntegerVec row(m);
    for (std::size_t e = 0; e < m; ++e) {
      row[e] = inst.edges[e].weight[k];
    }
    base.add(std::move(row), Relation::Eq, inst.goal[k]);
  }
  base.add(IntegerVec(m, Integer(1)), Relation::Geq, 1);

  // Depth-first over cut branches: each branch adds rows excluding the
  // previous disconnected support.
  std::vector<IlpSystem> pending{base};
  while (!pending.empty()) {
    IlpSystem sys = std::move(pending.back());
    pending.pop_back();
    IlpOptions shortest;
    shortest.objective = IntegerVec(m, Integer(1));
    auto usage = ilp_nonneg(sys, shortest);
    if (!usage) {
      continue;
    }
    const auto comp = components(inst, *usage);
    const std::size_t home = comp[inst.source];
    bool source_touched = false;
    std::optional<std::size_t> stray;
    for (std::size_t e = 0; e < m; ++e) {
      if ((*usage)[e] == 0) continue;
      if (comp[inst.edges[e].from] == home) {
        source_touched = true;
      } else if (!stray) {
        stray = comp[inst.edges[e].from];
      }
    }
    if (source_touched && !stray) {
      FlowSolution sol;
      sol.usage = *usage;
      Integer total = 0;
      for (const Integer& u : *usage) total += u;
      if (total <= Integer(static_cast<unsigned long>(opt.max_walk_length))) {
        auto walk = euler_walk(inst, *usage);
        if (!walk) {
          throw std::logic_error("flow_reach: connected balanced usage without an Euler walk");
        }
        sol.walk = std::move(*walk);
      }
      return sol;
    }
    // A support component D away from the source. A valid walk either avoids
    // D or crosses its boundary.
    const std::size_t d = *stray;
    IntegerVec touching(m, Integer(0)), crossing(m, Integer(0));
    for (std::size_t e = 0; e < m; ++e) {
      const bool a = comp[inst.edges[e].from] == d;
      const bool b = comp[inst.edges[e].to] == d;
      if (a || b) touching[e] = 1;
      if (a != b) crossing[e] = 1;
    }
    IlpSystem avoid = sys;
    avoid.add(touching, Relation::Eq, 0);
    IlpSystem cross = std::move(sys);
    cross.add(crossing, Relation::Geq, 1);
    pending.push_back(std::move(cross));
    pending.push_back(std::move(avoid));
  }
  return std::nullopt;
}

}  // namespace semireach::solvers
