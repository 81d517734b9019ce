#ifndef CORESPECTRA_TEST_HELPERS_HPP
#define CORESPECTRA_TEST_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "corespectra/graph.hpp"

namespace testutil {

using corespectra::Graph;

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(edges));
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, std::move(edges));
}

inline Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, std::move(edges));
}

// K4 on {0..3} plus `pendants` degree-1 vertices hanging off vertex 0.
inline Graph clique_with_pendants(int pendants) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) edges.emplace_back(i, j);
    for (int p = 0; p < pendants; ++p) edges.emplace_back(0, 4 + p);
    return Graph::from_edges(4 + pendants, std::move(edges));
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a.vertex_count(); ++u)
        for (int v : a.neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    const int shift = a.vertex_count();
    for (int u = 0; u < b.vertex_count(); ++u)
        for (int v : b.neighbors(u))
            if (u < v) edges.emplace_back(u + shift, v + shift);
    return Graph::from_edges(a.vertex_count() + b.vertex_count(), std::move(edges));
}

inline Graph gnp(int n, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

inline Graph random_tree(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        edges.emplace_back(parent(rng), v);
    }
    return Graph::from_edges(n, std::move(edges));
}

inline std::vector<double> random_nonnegative(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> x(static_cast<std::size_t>(n));
    for (double& v : x) v = unit(rng);
    return x;
}

// --- independent oracles, deliberately naive ---------------------------

// Union-find component count and membership, independent of the BFS path.
inline std::vector<std::vector<int>> union_find_components(const Graph& g) {
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            int ru = find(u), rv = find(v);
            if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
        }
    std::vector<std::vector<int>> by_root(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) by_root[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& c : by_root)
        if (!c.empty()) out.push_back(std::move(c));
    return out;
}

// One-at-a-time peeling with a caller-chosen removal order among the
// candidates; used to show the core set is order-independent.
inline std::vector<int> peel_one_at_a_time(const Graph& g, int k,
                                           std::mt19937_64& rng) {
    std::vector<int> deg(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
    std::vector<char> removed(g.vertex_count(), 0);

    while (true) {
        std::vector<int> candidates;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!removed[v] && deg[v] < k) candidates.push_back(v);
        if (candidates.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        int v = candidates[pick(rng)];
        removed[v] = 1;
        for (int w : g.neighbors(v))
            if (!removed[w]) --deg[w];
    }
    std::vector<int> core;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!removed[v]) core.push_back(v);
    return core;
}

// Exhaustive simple-cycle counts per vertex for tiny graphs: enumerate all
// vertex sequences (anchor smallest, second < last) and test edge closure.
inline std::vector<long long> brute_force_cycle_counts(const Graph& g, int len) {
    const int n = g.vertex_count();
    std::vector<long long> count(n, 0);
    std::vector<int> seq;
    std::function<void(int)> grow = [&](int anchor) {
        if (static_cast<int>(seq.size()) == len) {
            if (seq[1] > seq.back()) return;  // one direction per cycle
            for (int i = 0; i + 1 < len; ++i)
                if (!g.has_edge(seq[i], seq[i + 1])) return;
            if (!g.has_edge(seq.back(), anchor)) return;
            for (int v : seq) ++count[v];
            return;
        }
        for (int v = anchor + 1; v < n; ++v) {
            if (std::find(seq.begin(), seq.end(), v) != seq.end()) continue;
            seq.push_back(v);
            grow(anchor);
            seq.pop_back();
        }
    };
    for (int a = 0; a < n; ++a) {
        seq.assign(1, a);
        grow(a);
    }
    return count;
}

// Classical eigenvector centrality by plain matrix power iteration on A + I
// (the shift guarantees convergence on connected bipartite graphs too).
// Returns the L2-normalized vector; rho_out gets the spectral radius of A.
inline std::vector<double> matrix_power_iteration(const Graph& g, int iters,
                                                  double* rho_out = nullptr) {
    const int n = g.vertex_count();
    std::vector<double> x(n, 1.0), y(n);
    for (int it = 0; it < iters; ++it) {
        for (int i = 0; i < n; ++i) {
            double acc = x[i];  // identity shift
            for (int j : g.neighbors(i)) acc += x[j];
            y[i] = acc;
        }
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
    }
    if (rho_out) {
        // Rayleigh quotient of A at the converged vector.
        double num = 0.0, den = 0.0;
        for (int i = 0; i < n; ++i) {
            double row = 0.0;
            for (int j : g.neighbors(i)) row += x[j];
            num += x[i] * row;
            den += x[i] * x[i];
        }
        *rho_out = num / den;
    }
    return x;
}

inline bool sets_equal(std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace testutil

#endif
