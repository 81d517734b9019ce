#ifndef CORESPECTRA_GRAPH_HPP
#define CORESPECTRA_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace corespectra {

// Immutable simple undirected graph in CSR form.
//
// Internal vertex ids are dense and 0-based. Every neighbor list is strictly
// sorted, so there are no self-loops and no duplicate edges by construction.
// `index_base` remembers whether the source file was 0- or 1-based; label()
// renders a vertex in the original numbering for reports.
//
// Instances are immutable after construction and safe for concurrent reads.
class Graph {
public:
    Graph() = default;

    // Builds a graph from undirected 0-based endpoint pairs. Self-loops and
    // duplicate edges are dropped; the counts land in the optional out-params.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges,
                            int index_base = 0,
                            std::size_t* dropped_duplicates = nullptr,
                            std::size_t* dropped_self_loops = nullptr);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return neighbors_.size() / 2; }

    int degree(int v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

    std::span<const int> neighbors(int v) const {
        return {neighbors_.data() + offsets_[v],
                neighbors_.data() + offsets_[v + 1]};
    }

    int max_degree() const;
    bool has_edge(int u, int v) const;

    int index_base() const { return base_; }
    std::string label(int v) const { return std::to_string(v + base_); }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int base_ = 0;
    std::vector<std::int64_t> offsets_{0};
    std::vector<int> neighbors_;
};

enum class Indexing { zero, one, autodetect };
enum class FileFormat { edgelist, mtx, autodetect };

struct LoadResult {
    Graph graph;
    std::size_t dropped_duplicates = 0;
    std::size_t dropped_self_loops = 0;
};

// Whitespace-separated `u v` pairs, one per line; `#` and `%` start comments.
// With Indexing::autodetect the input is treated as 1-based iff no id is 0.
// n is max id + 1 after base adjustment.
LoadResult parse_edge_list(std::istream& in, Indexing indexing = Indexing::autodetect);

// Matrix Market coordinate format, pattern/real/integer, symmetric/general.
// Values are ignored, general matrices are symmetrized, diagonal entries are
// dropped. n comes from the declared dimension, so trailing isolated
// vertices survive.
LoadResult parse_matrix_market(std::istream& in);

// Reads from a file, picking the parser by extension (.mtx/.mm) unless told.
LoadResult load_graph_file(const std::string& path,
                           FileFormat format = FileFormat::autodetect);

// One `u v` line per edge in the graph's original numbering, ascending.
void write_edge_list(const Graph& g, std::ostream& out);

// Partition of [0,n) into maximal connected sets, each sorted, ordered by
// smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;  // new id -> original id
};

// Subgraph induced by `vertices` with ids relabeled compactly (order
// preserving). Duplicate ids in the input are folded.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

}  // namespace corespectra

#endif
