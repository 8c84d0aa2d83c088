#pragma once

// Reachability in a directed multigraph whose edges carry integer weight
// vectors: is there a nonempty walk from source to target with a prescribed
// total weight? Solved on edge-usage counts (flow conservation plus weight
// equations) with connectivity enforced by branching on cuts.

#include "semireach/ilp.hpp"

#include <optional>
#include <vector>

namespace semireach::solvers {

struct FlowEdge {
  std::size_t from = 0, to = 0;
  /// Caller-defined tag, e.g. the generator read along the edge.
  std::size_t label = 0;
  IntegerVec weight;
};

struct FlowInstance {
  std::size_t num_nodes = 0;
  std::vector<FlowEdge> edges;
  std::size_t source = 0, target = 0;
  IntegerVec goal;
};

struct FlowSolution {
  /// Number of traversals of each edge.
  IntegerVec usage;
  /// Edge indices of one walk realizing the usage, when its length is at most
  /// FlowOptions::max_walk_length; empty otherwise.
  std::vector<std::size_t> walk;
};

struct FlowOptions {
  std::size_t max_walk_length = 1000000;
  /// Breadth-first search over (node, partial weight) pairs tried before the
  /// integer program. 0 disables it.
  std::size_t probe_states = 200000;
};

std::optional<FlowSolution> flow_reach(const FlowInstance& inst, const FlowOptions& opt = {});

/// An Euler walk from source using each edge usage[e] times; nullopt if the
/// usage is not realizable (unbalanced or disconnected).
std::optional<std::vector<std::size_t>> euler_walk(const FlowInstance& inst, const IntegerVec& usage);

}  // namespace semireach::solvers
