#ifndef CORESPECTRA_METRICS_HPP
#define CORESPECTRA_METRICS_HPP

#include <span>
#include <string>
#include <vector>

#include "corespectra/graph.hpp"
#include "corespectra/spectral.hpp"

namespace corespectra {

enum class Measure { DC, CC, EC, KEC, C3, C4, C5 };

std::string measure_name(Measure m, int k = 0);

struct CentralityTable {
    Measure measure = Measure::DC;
    int k = 0;               // order for KEC, otherwise ignored
    std::vector<double> scores;
    bool no_core = false;    // KEC only: set when no k-core exists
};

// scores[i] = deg(i).
CentralityTable degree_centrality(const Graph& g);

// scores[i] = core number of i.
CentralityTable coreness_centrality(const Graph& g);

// Perron-vector scores of the k-adjacency tensor: positive exactly on the
// k-core, zero elsewhere. With an empty k-core the table is all zeros and
// no_core is set. k = 1 is classical eigenvector centrality.
CentralityTable k_order_eigenvector_centrality(const Graph& g, int k,
                                               const SpectralConfig& cfg);

// Classical eigenvector centrality, i.e. the k = 1 case relabeled EC.
CentralityTable eigenvector_centrality(const Graph& g, const SpectralConfig& cfg);

// Per-vertex counts of simple cycles, by exact length 3..max_len; a cycle is
// counted once for every vertex it contains. cumulative(l)[v] is the number
// of cycles through v of length at most l.
struct CycleCounts {
    int max_len = 3;
    std::vector<std::vector<long long>> per_len;  // per_len[l-3][v]

    std::vector<long long> cumulative(int len) const;
};

// Bounded-depth DFS enumeration with canonical anchoring: each undirected
// cycle is generated exactly once, from its smallest vertex, walking toward
// its smaller neighbor first. Parallel over anchor vertices; the merge is an
// integer sum, so results are deterministic. Aborts with a resource error
// past 1e9 enumerated cycles.
CycleCounts cycle_counts(const Graph& g, int max_len);

// Serial reference for the same enumeration, kept for tests and benchmarks.
CycleCounts cycle_counts_serial(const Graph& g, int max_len);

// Independent per-vertex triangle counts via sorted neighbor intersection.
// Must equal cycle_counts(g, 3) everywhere.
std::vector<long long> triangle_oracle(const Graph& g);

// Spearman rank correlation with average ranks on ties: Pearson correlation
// of the two rank vectors, clamped to [-1, 1]. Throws undefined_correlation
// when either side has zero rank variance.
double spearman(std::span<const double> a, std::span<const double> b);

struct CorrelationPair {
    std::string measure_a;
    std::string measure_b;
    double r_s = 0.0;
    bool defined = false;  // false when the correlation is undefined (all ties)
    int n_vertices = 0;
};

struct CorrelationReport {
    std::vector<CorrelationPair> pairs;
};

}  // namespace corespectra

#endif
