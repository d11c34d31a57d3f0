#pragma once

// Digit graphs: the mother graph M, permutiple graphs G_p, class graphs G_C,
// and their simple cycles.

#include <compare>
#include <cstddef>
#include <set>
#include <vector>

#include "permutiple/digits.hpp"

namespace permutiple {

struct DigitEdge {
  int from = 0;
  int to = 0;
  auto operator<=>(const DigitEdge&) const = default;
};

// "(2,8)"
std::string to_string(DigitEdge e);

class DigitGraph {
 public:
  explicit DigitGraph(int base, std::set<DigitEdge> edges = {});

  int base() const { return base_; }
  const std::set<DigitEdge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(DigitEdge e) const { return edges_.count(e) != 0; }

  void add(DigitEdge e);
  bool is_subgraph_of(const DigitGraph& other) const;
  DigitGraph unite(const DigitGraph& other) const;

  bool operator==(const DigitGraph&) const = default;

 private:
  int base_;
  std::set<DigitEdge> edges_;
};

// A simple directed cycle, stored as its vertex sequence rotated so the
// smallest vertex comes first. A loop is a cycle of length one.
class DigitCycle {
 public:
  explicit DigitCycle(std::vector<int> vertices);

  const std::vector<int>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  // (v0,v1), (v1,v2), ..., (v_{m-1},v0)
  std::vector<DigitEdge> edges() const;

  bool operator==(const DigitCycle&) const = default;
  auto operator<=>(const DigitCycle&) const = default;

 private:
  std::vector<int> vertices_;
};

std::string to_string(const DigitCycle& c);

bool is_mother_edge(DigitEdge e, int multiplier, int base);
DigitGraph build_mother_graph(int multiplier, int base);

// Edges (d_j, d_sigma(j)).
DigitGraph graph_of_permutiple(const PermutipleRecord& rec);

DigitGraph graph_of_cycles(int base, const std::vector<DigitCycle>& cycles);

// All simple cycles, sorted by vertex sequence. A nonzero max_length drops
// longer cycles during the search rather than after it.
std::vector<DigitCycle> enumerate_cycles(const DigitGraph& g,
                                         std::size_t max_length = 0);

DigitGraph reflect_digit_graph(const DigitGraph& g);
DigitCycle reflect_cycle(const DigitCycle& c, int base);

// Every edge lies on some cycle, i.e. each non-loop edge joins two vertices of
// the same strongly connected component.
bool is_cycle_union(const DigitGraph& g);

}  // namespace permutiple
