#include "corespectra/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "corespectra/errors.hpp"

namespace corespectra {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges,
                        int index_base,
                        std::size_t* dropped_duplicates,
                        std::size_t* dropped_self_loops) {
    require(n >= 0, "Graph::from_edges: negative vertex count");
    require(index_base == 0 || index_base == 1, "Graph::from_edges: base must be 0 or 1");

    std::size_t self_loops = 0;
    std::vector<std::pair<int, int>> canon;
    canon.reserve(edges.size());
    for (auto [u, v] : edges) {
        require(u >= 0 && u < n && v >= 0 && v < n, "Graph::from_edges: endpoint out of range");
        if (u == v) {
            ++self_loops;
            continue;
        }
        canon.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(canon.begin(), canon.end());
    auto last = std::unique(canon.begin(), canon.end());
    std::size_t duplicates = static_cast<std::size_t>(canon.end() - last);
    canon.erase(last, canon.end());

    Graph g;
    g.n_ = n;
    g.base_ = index_base;
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (auto [u, v] : canon) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (int i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];

    g.neighbors_.resize(canon.size() * 2);
    std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    // Two passes keep each list sorted: for vertex v, smaller partners of v
    // (pairs (u,v) with u < v) all precede larger ones (pairs (v,w) with w > v),
    // and canon is lexicographically sorted within each pass.
    for (auto [u, v] : canon) g.neighbors_[cursor[v]++] = u;
    for (auto [u, v] : canon) g.neighbors_[cursor[u]++] = v;

    if (dropped_duplicates) *dropped_duplicates = duplicates;
    if (dropped_self_loops) *dropped_self_loops = self_loops;
    return g;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

bool Graph::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '#' || c == '%';
    }
    return true;  // blank
}

int checked_vertex_id(long long id, int lineno) {
    if (id < 0) throw parse_error("negative vertex id", lineno);
    if (id > std::numeric_limits<int>::max() - 1)
        throw parse_error("vertex id too large", lineno);
    return static_cast<int>(id);
}

}  // namespace

LoadResult parse_edge_list(std::istream& in, Indexing indexing) {
    struct RawEdge {
        long long u, v;
        int line;
    };
    std::vector<RawEdge> raw;
    bool saw_zero = false;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        std::istringstream ls(line);
        long long a = 0, b = 0;
        if (!(ls >> a >> b))
            throw parse_error("expected two integer vertex ids", lineno);
        std::string extra;
        if (ls >> extra)
            throw parse_error("unexpected trailing token '" + extra + "'", lineno);
        if (a < 0 || b < 0) throw parse_error("negative vertex id", lineno);
        saw_zero = saw_zero || a == 0 || b == 0;
        raw.push_back({a, b, lineno});
    }

    int base;
    switch (indexing) {
        case Indexing::zero: base = 0; break;
        case Indexing::one: base = 1; break;
        default: base = saw_zero ? 0 : 1; break;
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw.size());
    int n = 0;
    for (const RawEdge& e : raw) {
        int u = checked_vertex_id(e.u - base, e.line);
        int v = checked_vertex_id(e.v - base, e.line);
        edges.emplace_back(u, v);
        n = std::max(n, std::max(u, v) + 1);
    }

    LoadResult out;
    out.graph = Graph::from_edges(n, std::move(edges), base,
                                  &out.dropped_duplicates, &out.dropped_self_loops);
    return out;
}

namespace {

std::string lowercase(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

LoadResult parse_matrix_market(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw format_error("empty Matrix Market input");
    ++lineno;

    std::istringstream header(lowercase(line));
    std::string banner, object, fmt, field, symmetry;
    header >> banner >> object >> fmt >> field >> symmetry;
    if (banner != "%%matrixmarket" || object != "matrix")
        throw format_error("not a Matrix Market matrix header");
    if (fmt != "coordinate")
        throw format_error("unsupported Matrix Market format '" + fmt + "' (coordinate only)");
    if (field != "pattern" && field != "real" && field != "integer")
        throw format_error("unsupported Matrix Market field '" + field + "'");
    if (symmetry != "symmetric" && symmetry != "general")
        throw format_error("unsupported Matrix Market symmetry '" + symmetry + "'");
    bool has_value = field != "pattern";

    // Size line, after any % comments.
    long long rows = -1, cols = -1, nnz = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        std::istringstream ls(line);
        if (!(ls >> rows >> cols >> nnz))
            throw parse_error("expected 'rows cols nnz' size line", lineno);
        std::string extra;
        if (ls >> extra) throw parse_error("unexpected trailing token '" + extra + "'", lineno);
        break;
    }
    if (rows < 0) throw parse_error("missing size line", lineno);
    if (rows != cols)
        throw format_error("adjacency input must be square, got " +
                           std::to_string(rows) + "x" + std::to_string(cols));
    if (rows > std::numeric_limits<int>::max() - 1)
        throw format_error("matrix dimension too large");
    if (nnz < 0) throw parse_error("negative entry count", lineno);

    int n = static_cast<int>(rows);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(nnz));

    long long seen = 0;
    while (seen < nnz) {
        if (!std::getline(in, line))
            throw parse_error("unexpected end of file: got " + std::to_string(seen) +
                                  " of " + std::to_string(nnz) + " entries",
                              lineno);
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        std::istringstream ls(line);
        long long i = 0, j = 0;
        if (!(ls >> i >> j)) throw parse_error("expected integer indices", lineno);
        if (has_value) {
            double value = 0;
            if (!(ls >> value)) throw parse_error("expected numeric value", lineno);
        }
        std::string extra;
        if (ls >> extra) throw parse_error("unexpected trailing token '" + extra + "'", lineno);
        if (i < 1 || i > rows || j < 1 || j > rows)
            throw parse_error("index out of declared bounds", lineno);
        edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
        ++seen;
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (!is_comment_or_blank(line))
            throw parse_error("unexpected data past declared entry count", lineno);
    }

    LoadResult out;
    out.graph = Graph::from_edges(n, std::move(edges), 1,
                                  &out.dropped_duplicates, &out.dropped_self_loops);
    return out;
}

LoadResult load_graph_file(const std::string& path, FileFormat format) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);

    if (format == FileFormat::autodetect) {
        std::string lower = lowercase(path);
        bool mtx = lower.size() >= 4 && lower.ends_with(".mtx");
        mtx = mtx || (lower.size() >= 3 && lower.ends_with(".mm"));
        format = mtx ? FileFormat::mtx : FileFormat::edgelist;
    }
    return format == FileFormat::mtx ? parse_matrix_market(in) : parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out << g.label(u) << ' ' << g.label(v) << '\n';
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> components;
    std::vector<char> visited(n, 0);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (visited[s]) continue;
        queue.clear();
        queue.push_back(s);
        visited[s] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbors(u)) {
                if (!visited[v]) {
                    visited[v] = 1;
                    queue.push_back(v);
                }
            }
        }
        std::sort(queue.begin(), queue.end());
        components.push_back(queue);
    }
    return components;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> keep(vertices.begin(), vertices.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (int v : keep)
        require(v >= 0 && v < g.vertex_count(), "induced_subgraph: vertex id out of range");

    std::vector<int> to_new(g.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) to_new[keep[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (int w : g.neighbors(keep[i]))
            if (keep[i] < w && to_new[w] >= 0)
                edges.emplace_back(static_cast<int>(i), to_new[w]);

    InducedSubgraph out;
    out.graph = Graph::from_edges(static_cast<int>(keep.size()), std::move(edges),
                                  g.index_base());
    out.to_original = std::move(keep);
    return out;
}

}  // namespace corespectra
