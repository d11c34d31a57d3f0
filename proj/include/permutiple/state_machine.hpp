#pragma once

// The carry machine for multiplication by n in base b. States are carries
// 0..n-1 and inputs are mother-graph edges (d_j, d_sigma(j)).

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "permutiple/mother_graph.hpp"

namespace permutiple {

struct LabeledTransition {
  int from = 0;
  int to = 0;
  DigitEdge label;
  auto operator<=>(const LabeledTransition&) const = default;
};

// The transition (c1, c2) enabled by a mother edge. Throws
// std::invalid_argument for a non-mother edge.
std::pair<int, int> mu(DigitEdge edge, int multiplier, int base);

// Labels grouped by state pair. Equality is structural.
class StateGraph {
 public:
  using EdgeMap = std::map<std::pair<int, int>, std::set<DigitEdge>>;

  StateGraph(int multiplier, int base);

  int multiplier() const { return multiplier_; }
  int base() const { return base_; }
  const std::set<int>& states() const { return states_; }
  const EdgeMap& edges() const { return edges_; }
  bool has_state(int c) const { return states_.count(c) != 0; }
  std::size_t label_count() const;

  void add_state(int c);
  void add_label(int c1, int c2, DigitEdge label);

  bool operator==(const StateGraph&) const = default;

 private:
  int multiplier_;
  int base_;
  std::set<int> states_;
  EdgeMap edges_;
};

// One edge per input. States are those touched by some edge.
class StateMultigraph {
 public:
  StateMultigraph(int multiplier, int base);

  int multiplier() const { return multiplier_; }
  int base() const { return base_; }
  const std::multiset<LabeledTransition>& transitions() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  std::set<int> states() const;
  std::vector<int> outdegrees() const;
  std::vector<int> indegrees() const;

  // Throws std::invalid_argument unless the triple satisfies the transition
  // equation b*c2 = n*d2 - d1 + c1.
  void add(LabeledTransition t);

  bool operator==(const StateMultigraph&) const = default;

 private:
  int multiplier_;
  int base_;
  std::multiset<LabeledTransition> edges_;
};

// The input word s = (d_0, d^_0)(d_1, d^_1)...; index 0 is least significant.
using InputString = std::vector<DigitEdge>;

std::string to_string(const InputString& s);

StateGraph build_state_graph(int multiplier, int base);
StateMultigraph build_state_multigraph(int multiplier, int base);

StateGraph cycle_image(const DigitCycle& c, int multiplier, int base);
StateMultigraph multi_image(const DigitCycle& c, int multiplier, int base);
// Multiset union of the multi-images of every listed cycle.
StateMultigraph multi_image(std::span<const DigitCycle> cycles, int multiplier,
                            int base);

// Throw std::invalid_argument on an empty list or mixed parameters.
StateGraph union_images(std::span<const StateGraph> parts);
StateMultigraph multiset_union(std::span<const StateMultigraph> parts);

// Forgets multiplicities.
StateGraph to_state_graph(const StateMultigraph& g);

StateGraph reflect_state_graph(const StateGraph& g);
StateMultigraph reflect_multigraph(const StateMultigraph& g);

// Every state with an edge lies in one strongly connected component.
bool is_strongly_connected(const StateGraph& g);

struct WalkResult {
  // c_0, c_1, ... up to the last consistent state.
  std::vector<int> states;
  // Index of the first input whose source state disagrees, or the string
  // length when the walk ends away from state 0.
  std::optional<std::size_t> failure;

  bool ok() const { return !failure.has_value(); }
};

// Runs the machine from state 0. A non-mother input is a failure at its index.
WalkResult walk_states(const InputString& s, int multiplier, int base);

}  // namespace permutiple
