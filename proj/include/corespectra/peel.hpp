#ifndef CORESPECTRA_PEEL_HPP
#define CORESPECTRA_PEEL_HPP

#include <vector>

#include "corespectra/graph.hpp"

namespace corespectra {

// Result of synchronous k-core peeling. Each wave holds the vertices whose
// degree fell below k simultaneously at that round; waves contains only
// nonempty rounds (it is empty when every vertex already has degree >= k).
// waves and core partition [0,n); all sets are sorted.
struct PeelResult {
    int k = 0;
    std::vector<std::vector<int>> waves;
    std::vector<int> core;
    bool core_is_connected = false;  // false when the core is empty
};

// Removes all vertices of degree < k round by round until none remain.
// The surviving core is the unique maximal subgraph of minimum degree >= k,
// possibly empty. O(n + m).
PeelResult peel(const Graph& g, int k);

// Per-vertex core numbers via the bucketed min-degree removal order.
// coreness[v] is the largest k with v in the k-core; 0 for isolated vertices.
std::vector<int> coreness(const Graph& g);

// Max core number over all vertices (0 for an empty or edgeless graph).
int degeneracy(const Graph& g);

}  // namespace corespectra

#endif
