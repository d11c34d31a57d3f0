#include "permutiple/mother_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "graph_util.hpp"

namespace permutiple {

std::string to_string(DigitEdge e) {
  return "(" + std::to_string(e.from) + "," + std::to_string(e.to) + ")";
}

DigitGraph::DigitGraph(int base, std::set<DigitEdge> edges)
    : base_(base), edges_(std::move(edges)) {
  if (base_ < 2) throw std::invalid_argument("base must be at least 2");
  for (const auto& e : edges_) {
    if (e.from < 0 || e.from >= base_ || e.to < 0 || e.to >= base_) {
      throw std::invalid_argument("edge " + to_string(e) +
                                  " has an endpoint outside base " +
                                  std::to_string(base_));
    }
  }
}

void DigitGraph::add(DigitEdge e) {
  if (e.from < 0 || e.from >= base_ || e.to < 0 || e.to >= base_) {
    throw std::invalid_argument("edge " + to_string(e) + " out of range");
  }
  edges_.insert(e);
}

bool DigitGraph::is_subgraph_of(const DigitGraph& other) const {
  return base_ == other.base_ &&
         std::includes(other.edges_.begin(), other.edges_.end(),
                       edges_.begin(), edges_.end());
}

DigitGraph DigitGraph::unite(const DigitGraph& other) const {
  if (base_ != other.base_) {
    throw std::invalid_argument("cannot unite digit graphs of different bases");
  }
  auto edges = edges_;
  edges.insert(other.edges_.begin(), other.edges_.end());
  return DigitGraph(base_, std::move(edges));
}

DigitCycle::DigitCycle(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("empty cycle");
  auto sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("cycle repeats a vertex");
  }
  std::rotate(vertices_.begin(),
              std::min_element(vertices_.begin(), vertices_.end()),
              vertices_.end());
}

std::vector<DigitEdge> DigitCycle::edges() const {
  std::vector<DigitEdge> out;
  out.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    out.push_back({vertices_[i], vertices_[(i + 1) % vertices_.size()]});
  }
  return out;
}

std::string to_string(const DigitCycle& c) {
  std::string out = "{";
  const auto edges = c.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ',';
    out += to_string(edges[i]);
  }
  return out + "}";
}

bool is_mother_edge(DigitEdge e, int multiplier, int base) {
  return lambda_residue(static_cast<long long>(e.from) +
                            static_cast<long long>(base - multiplier) * e.to,
                        base) <= multiplier - 1;
}

DigitGraph build_mother_graph(int multiplier, int base) {
  check_parameters(multiplier, base);
  DigitGraph g(base);
  for (int d1 = 0; d1 < base; ++d1) {
    for (int d2 = 0; d2 < base; ++d2) {
      if (is_mother_edge({d1, d2}, multiplier, base)) g.add({d1, d2});
    }
  }
  return g;
}

DigitGraph graph_of_permutiple(const PermutipleRecord& rec) {
  DigitGraph g(rec.base());
  const auto& d = rec.digits();
  for (std::size_t j = 0; j < rec.length(); ++j) {
    g.add({d[j], d[static_cast<std::size_t>(rec.sigma()(j))]});
  }
  return g;
}

DigitGraph graph_of_cycles(int base, const std::vector<DigitCycle>& cycles) {
  DigitGraph g(base);
  for (const auto& c : cycles) {
    for (const auto& e : c.edges()) g.add(e);
  }
  return g;
}

namespace {

struct CycleSearch {
  const std::vector<std::vector<int>>& adj;
  std::size_t max_length;
  int root = 0;
  std::vector<int> path;
  std::vector<bool> on_path;
  std::vector<DigitCycle>& out;

  void extend(int v) {
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (w == root) {
        out.emplace_back(path);
      } else if (w > root && !on_path[static_cast<std::size_t>(w)] &&
                 (max_length == 0 || path.size() < max_length)) {
        path.push_back(w);
        on_path[static_cast<std::size_t>(w)] = true;
        extend(w);
        on_path[static_cast<std::size_t>(w)] = false;
        path.pop_back();
      }
    }
  }
};

}  // namespace

std::vector<DigitCycle> enumerate_cycles(const DigitGraph& g,
                                         std::size_t max_length) {
  const auto b = static_cast<std::size_t>(g.base());
  std::vector<std::vector<int>> adj(b);
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.from)].push_back(e.to);
  }
  std::vector<DigitCycle> out;
  CycleSearch search{adj, max_length, 0, {}, std::vector<bool>(b, false), out};
  for (std::size_t r = 0; r < b; ++r) {
    search.root = static_cast<int>(r);
    search.path = {search.root};
    search.on_path[r] = true;
    search.extend(search.root);
    search.on_path[r] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

DigitGraph reflect_digit_graph(const DigitGraph& g) {
  const int top = g.base() - 1;
  DigitGraph out(g.base());
  for (const auto& e : g.edges()) out.add({top - e.from, top - e.to});
  return out;
}

DigitCycle reflect_cycle(const DigitCycle& c, int base) {
  auto v = c.vertices();
  for (int& x : v) x = base - 1 - x;
  return DigitCycle(std::move(v));
}

bool is_cycle_union(const DigitGraph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.base()));
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.from)].push_back(e.to);
  }
  const auto comp = detail::strongly_connected_components(adj);
  return std::all_of(g.edges().begin(), g.edges().end(), [&](DigitEdge e) {
    return e.from == e.to || comp[static_cast<std::size_t>(e.from)] ==
                                 comp[static_cast<std::size_t>(e.to)];
  });
}

}  // namespace permutiple
