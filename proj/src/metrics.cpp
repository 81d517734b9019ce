#include "corespectra/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>

#include "corespectra/errors.hpp"
#include "corespectra/peel.hpp"

namespace corespectra {

std::string measure_name(Measure m, int k) {
    switch (m) {
        case Measure::DC: return "dc";
        case Measure::CC: return "cc";
        case Measure::EC: return "ec";
        case Measure::KEC: return "kec" + std::to_string(k);
        case Measure::C3: return "c3";
        case Measure::C4: return "c4";
        case Measure::C5: return "c5";
    }
    return "?";
}

CentralityTable degree_centrality(const Graph& g) {
    CentralityTable t;
    t.measure = Measure::DC;
    t.scores.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) t.scores[v] = g.degree(v);
    return t;
}

CentralityTable coreness_centrality(const Graph& g) {
    CentralityTable t;
    t.measure = Measure::CC;
    std::vector<int> core = coreness(g);
    t.scores.assign(core.begin(), core.end());
    return t;
}

CentralityTable k_order_eigenvector_centrality(const Graph& g, int k,
                                               const SpectralConfig& cfg) {
    require(k >= 1, "k_order_eigenvector_centrality: k must be >= 1");
    SpectralConfig local = cfg;
    local.k = k;

    CentralityTable t;
    t.measure = Measure::KEC;
    t.k = k;
    SpectralResult spectrum = spectral_radius_k(g, local);
    t.no_core = spectrum.rho < 1.0 - kExistenceEpsilon;
    t.scores = std::move(spectrum.vector);
    if (t.scores.empty()) t.scores.assign(g.vertex_count(), 0.0);
    return t;
}

CentralityTable eigenvector_centrality(const Graph& g, const SpectralConfig& cfg) {
    CentralityTable t = k_order_eigenvector_centrality(g, 1, cfg);
    t.measure = Measure::EC;
    t.k = 0;
    return t;
}

std::vector<long long> CycleCounts::cumulative(int len) const {
    require(len >= 3 && len <= max_len, "CycleCounts::cumulative: length out of range");
    std::vector<long long> total(per_len.empty() ? 0 : per_len[0].size(), 0);
    for (int l = 3; l <= len; ++l)
        for (std::size_t v = 0; v < total.size(); ++v) total[v] += per_len[l - 3][v];
    return total;
}

namespace {

constexpr long long kCycleGuard = 1'000'000'000;

// Enumerates simple cycles anchored at their smallest vertex. path holds
// [a, v1, ..., vd]; only vertices > a extend it, and a cycle closes once per
// direction class via path[1] < path.back().
class AnchorCounter {
public:
    AnchorCounter(const Graph& g, int max_len)
        : g_(g), max_len_(max_len), on_path_(g.vertex_count(), 0),
          counts_(static_cast<std::size_t>(max_len - 2),
                  std::vector<long long>(g.vertex_count(), 0)) {}

    void run(int anchor) {
        anchor_ = anchor;
        path_.clear();
        path_.push_back(anchor);
        on_path_[anchor] = 1;
        extend(anchor, 0);
        on_path_[anchor] = 0;
    }

    long long found() const { return found_; }
    const std::vector<std::vector<long long>>& counts() const { return counts_; }

    // Adds other's counts into this one's (order-independent integer sums).
    void merge(const AnchorCounter& other) {
        for (std::size_t l = 0; l < counts_.size(); ++l)
            for (std::size_t v = 0; v < counts_[l].size(); ++v)
                counts_[l][v] += other.counts_[l][v];
        found_ += other.found_;
    }

private:
    void extend(int u, int depth) {
        for (int w : g_.neighbors(u)) {
            if (w == anchor_) {
                if (depth >= 2 && path_[1] < u) {
                    const int len = depth + 1;
                    for (int v : path_) ++counts_[len - 3][v];
                    ++found_;
                }
                continue;
            }
            if (w > anchor_ && !on_path_[w] && depth < max_len_ - 1) {
                path_.push_back(w);
                on_path_[w] = 1;
                extend(w, depth + 1);
                on_path_[w] = 0;
                path_.pop_back();
            }
        }
    }

    const Graph& g_;
    int max_len_;
    int anchor_ = -1;
    std::vector<int> path_;
    std::vector<char> on_path_;
    std::vector<std::vector<long long>> counts_;
    long long found_ = 0;
};

CycleCounts count_cycles(const Graph& g, int max_len, bool parallel) {
    require(max_len >= 3 && max_len <= 5, "cycle_counts: max_len must be 3, 4 or 5");
    const int n = g.vertex_count();

    CycleCounts out;
    out.max_len = max_len;
    out.per_len.assign(static_cast<std::size_t>(max_len - 2),
                       std::vector<long long>(n, 0));
    if (n == 0) return out;

    std::atomic<long long> global_found{0};
    std::atomic<bool> overflow{false};

    AnchorCounter total(g, max_len);
#pragma omp parallel if (parallel && n > 32)
    {
        AnchorCounter local(g, max_len);
#pragma omp for schedule(dynamic)
        for (int a = 0; a < n; ++a) {
            if (overflow.load(std::memory_order_relaxed)) continue;
            long long before = local.found();
            local.run(a);
            long long gained = local.found() - before;
            if (global_found.fetch_add(gained, std::memory_order_relaxed) + gained >
                kCycleGuard)
                overflow.store(true, std::memory_order_relaxed);
        }
#pragma omp critical
        total.merge(local);
    }
    if (overflow.load())
        throw resource_error("cycle enumeration exceeded 1e9 cycles");

    for (int l = 3; l <= max_len; ++l) out.per_len[l - 3] = total.counts()[l - 3];
    return out;
}

}  // namespace

CycleCounts cycle_counts(const Graph& g, int max_len) {
    return count_cycles(g, max_len, true);
}

CycleCounts cycle_counts_serial(const Graph& g, int max_len) {
    return count_cycles(g, max_len, false);
}

std::vector<long long> triangle_oracle(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<long long> t(n, 0);
    for (int v = 0; v < n; ++v) {
        auto nv = g.neighbors(v);
        long long closed = 0;
        for (int u : nv) {
            auto nu = g.neighbors(u);
            // sorted intersection size |N(v) ∩ N(u)|
            std::size_t i = 0, j = 0;
            while (i < nv.size() && j < nu.size()) {
                if (nv[i] < nu[j]) ++i;
                else if (nv[i] > nu[j]) ++j;
                else { ++closed; ++i; ++j; }
            }
        }
        t[v] = closed / 2;  // each triangle at v closes via both incident edges
    }
    return t;
}

namespace {

std::vector<double> fractional_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && values[order[j]] == values[order[i]]) ++j;
        const double avg = (static_cast<double>(i) + static_cast<double>(j) + 1.0) / 2.0;
        for (std::size_t p = i; p < j; ++p) ranks[order[p]] = avg;
        i = j;
    }
    return ranks;
}

}  // namespace

double spearman(std::span<const double> a, std::span<const double> b) {
    require(a.size() == b.size(), "spearman: vectors must have equal length");
    require(a.size() >= 2, "spearman: need at least two observations");

    std::vector<double> ra = fractional_ranks(a);
    std::vector<double> rb = fractional_ranks(b);

    const double n = static_cast<double>(ra.size());
    double mean_a = 0.0, mean_b = 0.0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        mean_a += ra[i];
        mean_b += rb[i];
    }
    mean_a /= n;
    mean_b /= n;

    double s_ab = 0.0, s_aa = 0.0, s_bb = 0.0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        const double da = ra[i] - mean_a;
        const double db = rb[i] - mean_b;
        s_ab += da * db;
        s_aa += da * da;
        s_bb += db * db;
    }
    if (s_aa == 0.0 || s_bb == 0.0)
        throw undefined_correlation("spearman: zero rank variance (all values tied)");

    double r = s_ab / std::sqrt(s_aa * s_bb);
    return std::clamp(r, -1.0, 1.0);
}

}  // namespace corespectra
