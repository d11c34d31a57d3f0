#include "graph_util.hpp"

#include <algorithm>
#include <utility>

namespace permutiple::detail {

std::vector<int> strongly_connected_components(
    const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int counter = 0, ncomp = 0;

  // Iterative to keep deep graphs off the call stack.
  std::vector<std::pair<int, std::size_t>> frames;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next < adj[v].size()) {
        const int w = adj[v][next++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = ncomp;
        } while (w != v);
        ++ncomp;
      }
      const int done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const int parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return comp;
}

bool strongly_connected_on(const std::vector<std::vector<int>>& adj,
                           const std::vector<bool>& active) {
  const auto comp = strongly_connected_components(adj);
  int seen = -1;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (!active[v]) continue;
    if (seen == -1) {
      seen = comp[v];
    } else if (comp[v] != seen) {
      return false;
    }
  }
  return true;
}

}  // namespace permutiple::detail
