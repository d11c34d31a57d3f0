#include "permutiple/state_machine.hpp"

#include <stdexcept>

#include "graph_util.hpp"

namespace permutiple {

std::pair<int, int> mu(DigitEdge edge, int multiplier, int base) {
  if (edge.from < 0 || edge.from >= base || edge.to < 0 || edge.to >= base ||
      !is_mother_edge(edge, multiplier, base)) {
    throw std::invalid_argument(to_string(edge) + " is not an edge of the (" +
                                std::to_string(multiplier) + "," +
                                std::to_string(base) + ")-mother graph");
  }
  const int c1 = lambda_residue(
      edge.from + static_cast<long long>(base - multiplier) * edge.to, base);
  const int numer = multiplier * edge.to - edge.from + c1;
  if (numer % base != 0) {
    throw std::logic_error("transition numerator " + std::to_string(numer) +
                           " not divisible by the base");
  }
  const int c2 = numer / base;
  if (c2 < 0 || c2 >= multiplier) {
    throw std::logic_error("transition target out of range for " +
                           to_string(edge));
  }
  return {c1, c2};
}

StateGraph::StateGraph(int multiplier, int base)
    : multiplier_(multiplier), base_(base) {
  check_parameters(multiplier, base);
}

std::size_t StateGraph::label_count() const {
  std::size_t total = 0;
  for (const auto& [key, labels] : edges_) total += labels.size();
  return total;
}

void StateGraph::add_state(int c) {
  if (c < 0 || c >= multiplier_) {
    throw std::invalid_argument("state " + std::to_string(c) + " out of range");
  }
  states_.insert(c);
}

void StateGraph::add_label(int c1, int c2, DigitEdge label) {
  add_state(c1);
  add_state(c2);
  edges_[{c1, c2}].insert(label);
}

StateMultigraph::StateMultigraph(int multiplier, int base)
    : multiplier_(multiplier), base_(base) {
  check_parameters(multiplier, base);
}

std::set<int> StateMultigraph::states() const {
  std::set<int> out;
  for (const auto& t : edges_) {
    out.insert(t.from);
    out.insert(t.to);
  }
  return out;
}

std::vector<int> StateMultigraph::outdegrees() const {
  std::vector<int> deg(static_cast<std::size_t>(multiplier_), 0);
  for (const auto& t : edges_) ++deg[static_cast<std::size_t>(t.from)];
  return deg;
}

std::vector<int> StateMultigraph::indegrees() const {
  std::vector<int> deg(static_cast<std::size_t>(multiplier_), 0);
  for (const auto& t : edges_) ++deg[static_cast<std::size_t>(t.to)];
  return deg;
}

void StateMultigraph::add(LabeledTransition t) {
  if (t.from < 0 || t.from >= multiplier_ || t.to < 0 || t.to >= multiplier_ ||
      base_ * t.to != multiplier_ * t.label.to - t.label.from + t.from) {
    throw std::invalid_argument("triple (" + std::to_string(t.from) + "," +
                                std::to_string(t.to) + "," + to_string(t.label) +
                                ") violates the transition equation");
  }
  edges_.insert(t);
}

std::string to_string(const InputString& s) {
  std::string out;
  for (const auto& e : s) out += to_string(e);
  return out;
}

StateGraph build_state_graph(int multiplier, int base) {
  StateGraph g(multiplier, base);
  for (int c = 0; c < multiplier; ++c) g.add_state(c);
  const auto mother = build_mother_graph(multiplier, base);
  for (const auto& e : mother.edges()) {
    const auto [c1, c2] = mu(e, multiplier, base);
    g.add_label(c1, c2, e);
  }
  return g;
}

StateMultigraph build_state_multigraph(int multiplier, int base) {
  StateMultigraph g(multiplier, base);
  const auto mother = build_mother_graph(multiplier, base);
  for (const auto& e : mother.edges()) {
    const auto [c1, c2] = mu(e, multiplier, base);
    g.add({c1, c2, e});
  }
  return g;
}

StateGraph cycle_image(const DigitCycle& c, int multiplier, int base) {
  StateGraph g(multiplier, base);
  for (const auto& e : c.edges()) {
    const auto [c1, c2] = mu(e, multiplier, base);
    g.add_label(c1, c2, e);
  }
  return g;
}

StateMultigraph multi_image(const DigitCycle& c, int multiplier, int base) {
  StateMultigraph g(multiplier, base);
  for (const auto& e : c.edges()) {
    const auto [c1, c2] = mu(e, multiplier, base);
    g.add({c1, c2, e});
  }
  return g;
}

StateMultigraph multi_image(std::span<const DigitCycle> cycles, int multiplier,
                            int base) {
  StateMultigraph g(multiplier, base);
  for (const auto& c : cycles) {
    const auto image = multi_image(c, multiplier, base);
    for (const auto& t : image.transitions()) g.add(t);
  }
  return g;
}

StateGraph union_images(std::span<const StateGraph> parts) {
  if (parts.empty()) throw std::invalid_argument("union of no state graphs");
  StateGraph out(parts.front().multiplier(), parts.front().base());
  for (const auto& p : parts) {
    if (p.multiplier() != out.multiplier() || p.base() != out.base()) {
      throw std::invalid_argument("union of state graphs with different (n,b)");
    }
    for (int c : p.states()) out.add_state(c);
    for (const auto& [key, labels] : p.edges()) {
      for (const auto& l : labels) out.add_label(key.first, key.second, l);
    }
  }
  return out;
}

StateMultigraph multiset_union(std::span<const StateMultigraph> parts) {
  if (parts.empty()) throw std::invalid_argument("union of no multigraphs");
  StateMultigraph out(parts.front().multiplier(), parts.front().base());
  for (const auto& p : parts) {
    if (p.multiplier() != out.multiplier() || p.base() != out.base()) {
      throw std::invalid_argument("union of multigraphs with different (n,b)");
    }
    for (const auto& t : p.transitions()) out.add(t);
  }
  return out;
}

StateGraph to_state_graph(const StateMultigraph& g) {
  StateGraph out(g.multiplier(), g.base());
  for (const auto& t : g.transitions()) out.add_label(t.from, t.to, t.label);
  return out;
}

StateGraph reflect_state_graph(const StateGraph& g) {
  const int top_c = g.multiplier() - 1;
  const int top_d = g.base() - 1;
  StateGraph out(g.multiplier(), g.base());
  for (int c : g.states()) out.add_state(top_c - c);
  for (const auto& [key, labels] : g.edges()) {
    for (const auto& l : labels) {
      out.add_label(top_c - key.first, top_c - key.second,
                    {top_d - l.from, top_d - l.to});
    }
  }
  return out;
}

StateMultigraph reflect_multigraph(const StateMultigraph& g) {
  const int top_c = g.multiplier() - 1;
  const int top_d = g.base() - 1;
  StateMultigraph out(g.multiplier(), g.base());
  for (const auto& t : g.transitions()) {
    out.add({top_c - t.from, top_c - t.to,
             {top_d - t.label.from, top_d - t.label.to}});
  }
  return out;
}

bool is_strongly_connected(const StateGraph& g) {
  const auto n = static_cast<std::size_t>(g.multiplier());
  std::vector<std::vector<int>> adj(n);
  std::vector<bool> active(n, false);
  for (const auto& [key, labels] : g.edges()) {
    adj[static_cast<std::size_t>(key.first)].push_back(key.second);
    active[static_cast<std::size_t>(key.first)] = true;
    active[static_cast<std::size_t>(key.second)] = true;
  }
  return detail::strongly_connected_on(adj, active);
}

WalkResult walk_states(const InputString& s, int multiplier, int base) {
  check_parameters(multiplier, base);
  WalkResult r;
  r.states.push_back(0);
  for (std::size_t j = 0; j < s.size(); ++j) {
    const auto& e = s[j];
    if (e.from < 0 || e.from >= base || e.to < 0 || e.to >= base ||
        !is_mother_edge(e, multiplier, base)) {
      r.failure = j;
      return r;
    }
    const auto [c1, c2] = mu(e, multiplier, base);
    if (c1 != r.states.back()) {
      r.failure = j;
      return r;
    }
    r.states.push_back(c2);
  }
  if (r.states.back() != 0) r.failure = s.size();
  return r;
}

}  // namespace permutiple
