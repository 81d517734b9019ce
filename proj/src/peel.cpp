#include "corespectra/peel.hpp"

#include <algorithm>

#include "corespectra/errors.hpp"

namespace corespectra {

PeelResult peel(const Graph& g, int k) {
    require(k >= 1, "peel: k must be >= 1");
    int n = g.vertex_count();

    std::vector<int> deg(n);
    std::vector<int> wave_of(n, -1);  // -1 = survives
    std::vector<int> current, next;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] < k) {
            wave_of[v] = 0;
            current.push_back(v);
        }
    }

    int rounds = current.empty() ? 0 : 1;
    while (!current.empty()) {
        // the whole wave leaves at once; only still-alive neighbors keep a
        // maintained degree
        for (int v : current)
            for (int w : g.neighbors(v))
                if (wave_of[w] < 0 && --deg[w] < k) {
                    wave_of[w] = rounds;
                    next.push_back(w);
                }
        current = std::move(next);
        next.clear();
        if (!current.empty()) ++rounds;
    }

    PeelResult result;
    result.k = k;
    result.waves.resize(rounds);
    // one ascending pass leaves every wave and the core sorted
    for (int v = 0; v < n; ++v) {
        if (wave_of[v] >= 0)
            result.waves[wave_of[v]].push_back(v);
        else
            result.core.push_back(v);
    }

    // Connectivity of the induced core via BFS restricted to survivors.
    if (!result.core.empty()) {
        std::vector<char> seen(n, 0);
        std::vector<int> queue{result.core.front()};
        seen[queue.front()] = 1;
        std::size_t reached = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            ++reached;
            for (int w : g.neighbors(queue[head]))
                if (wave_of[w] < 0 && !seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
        result.core_is_connected = reached == result.core.size();
    }
    return result;
}

std::vector<int> coreness(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> core(n);
    if (n == 0) return core;

    int max_deg = g.max_degree();
    for (int v = 0; v < n; ++v) core[v] = g.degree(v);

    // Bin-sorted vertices by current degree; repeatedly take a minimum-degree
    // vertex and decrement its remaining neighbors.
    std::vector<int> bin(max_deg + 1, 0), pos(n), vert(n);
    for (int v = 0; v < n; ++v) ++bin[core[v]];
    int start = 0;
    for (int d = 0; d <= max_deg; ++d) {
        int count = bin[d];
        bin[d] = start;
        start += count;
    }
    for (int v = 0; v < n; ++v) {
        pos[v] = bin[core[v]];
        vert[pos[v]] = v;
        ++bin[core[v]];
    }
    for (int d = max_deg; d >= 1; --d) bin[d] = bin[d - 1];
    bin[0] = 0;

    for (int i = 0; i < n; ++i) {
        int v = vert[i];
        for (int u : g.neighbors(v)) {
            if (core[u] > core[v]) {
                int pu = pos[u];
                int pw = bin[core[u]];
                int w = vert[pw];
                vert[pw] = u;
                vert[pu] = w;
                pos[u] = pw;
                pos[w] = pu;
                ++bin[core[u]];
                --core[u];
            }
        }
    }
    return core;
}

int degeneracy(const Graph& g) {
    int best = 0;
    for (int c : coreness(g)) best = std::max(best, c);
    return best;
}

}  // namespace corespectra
