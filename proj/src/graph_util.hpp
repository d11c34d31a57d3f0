#pragma once

#include <vector>

namespace permutiple::detail {

// Tarjan's algorithm. Returns comp[v], the component id of each vertex.
std::vector<int> strongly_connected_components(
    const std::vector<std::vector<int>>& adj);

// True when every vertex with nonzero degree sits in one strongly connected
// component. Vertices flagged false in `active` are ignored.
bool strongly_connected_on(const std::vector<std::vector<int>>& adj,
                           const std::vector<bool>& active);

}  // namespace permutiple::detail
