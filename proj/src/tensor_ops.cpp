#include "corespectra/tensor_ops.hpp"

#include <algorithm>

#include "corespectra/errors.hpp"

namespace corespectra {

namespace detail {

namespace {

// e_k over the neighbor values of one vertex. coef is k+1 scratch doubles.
// Neighbors are visited in sorted order, fixing the summation order.
inline double esp_of_neighbors(const Graph& g, int v, int k, const double* x,
                               double* coef) {
    auto nbrs = g.neighbors(v);
    if (static_cast<int>(nbrs.size()) < k) return 0.0;
    coef[0] = 1.0;
    std::fill(coef + 1, coef + k + 1, 0.0);
    int seen = 0;
    for (int j : nbrs) {
        const double value = x[j];
        ++seen;
        const int top = seen < k ? seen : k;
        for (int d = top; d >= 1; --d) coef[d] += value * coef[d - 1];
    }
    return coef[k];
}

constexpr int kParallelCutoff = 256;

}  // namespace

void apply_kernel(const Graph& g, int k, const double* x, double* out, bool parallel) {
    const int n = g.vertex_count();
#pragma omp parallel if (parallel && n > kParallelCutoff)
    {
        std::vector<double> coef(static_cast<std::size_t>(k) + 1);
#pragma omp for schedule(dynamic, 64)
        for (int v = 0; v < n; ++v) out[v] = esp_of_neighbors(g, v, k, x, coef.data());
    }
}

void shifted_kernel(const Graph& g, int k, const double* x, double* out, bool parallel) {
    const int n = g.vertex_count();
#pragma omp parallel if (parallel && n > kParallelCutoff)
    {
        std::vector<double> coef(static_cast<std::size_t>(k) + 1);
#pragma omp for schedule(dynamic, 64)
        for (int v = 0; v < n; ++v)
            out[v] = esp_of_neighbors(g, v, k, x, coef.data()) + ipow(x[v], k);
    }
}

}  // namespace detail

namespace {

void validate_apply_args(const Graph& g, int k, std::span<const double> x) {
    require(k >= 1, "apply_k: k must be >= 1");
    require(static_cast<int>(x.size()) == g.vertex_count(),
            "apply_k: vector length must equal vertex count");
    for (double value : x)
        require(value >= 0.0, "apply_k: entries must be nonnegative");
}

}  // namespace

std::vector<double> apply_k(const Graph& g, int k, std::span<const double> x) {
    validate_apply_args(g, k, x);
    std::vector<double> out(x.size());
    detail::apply_kernel(g, k, x.data(), out.data(), true);
    return out;
}

std::vector<double> apply_k_serial(const Graph& g, int k, std::span<const double> x) {
    validate_apply_args(g, k, x);
    std::vector<double> out(x.size());
    std::vector<double> coef(static_cast<std::size_t>(k) + 1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto nbrs = g.neighbors(v);
        if (static_cast<int>(nbrs.size()) < k) {
            out[v] = 0.0;
            continue;
        }
        coef[0] = 1.0;
        std::fill(coef.begin() + 1, coef.end(), 0.0);
        int seen = 0;
        for (int j : nbrs) {
            const double value = x[j];
            ++seen;
            const int top = seen < k ? seen : k;
            for (int d = top; d >= 1; --d) coef[d] += value * coef[d - 1];
        }
        out[v] = coef[k];
    }
    return out;
}

std::vector<double> shifted_apply(const Graph& g, int k, std::span<const double> x) {
    validate_apply_args(g, k, x);
    std::vector<double> out(x.size());
    detail::shifted_kernel(g, k, x.data(), out.data(), true);
    return out;
}

}  // namespace corespectra
