#include "corespectra/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "corespectra/errors.hpp"
#include "corespectra/peel.hpp"
#include "corespectra/tensor_ops.hpp"

namespace corespectra {

namespace {

void validate_config(const SpectralConfig& cfg) {
    require(cfg.k >= 1, "spectral: k must be >= 1");
    require(cfg.tol > 0.0, "spectral: tol must be positive");
    require(cfg.max_iters >= 1, "spectral: max_iters must be >= 1");
}

double vector_norm(std::span<const double> v, Norm norm) {
    double acc = 0.0;
    switch (norm) {
        case Norm::L1:
            for (double x : v) acc += std::abs(x);
            return acc;
        case Norm::L2:
            for (double x : v) acc += x * x;
            return std::sqrt(acc);
        case Norm::Linf:
            for (double x : v) acc = std::max(acc, std::abs(x));
            return acc;
    }
    return acc;
}

void renormalize(std::vector<double>& v, Norm norm) {
    double scale = vector_norm(v, norm);
    if (scale > 0.0)
        for (double& x : v) x /= scale;
}

double kth_root(double y, int k) {
    if (k == 1) return y;
    if (k == 2) return std::sqrt(y);
    return std::pow(y, 1.0 / static_cast<double>(k));
}

}  // namespace

SpectralResult nqz_iterate(const Graph& g, const SpectralConfig& cfg) {
    validate_config(cfg);
    const int n = g.vertex_count();
    require(n > 0, "nqz_iterate: graph must be nonempty");
    const int k = cfg.k;

    std::vector<double> x(static_cast<std::size_t>(n), 1.0);
    std::vector<double> y(static_cast<std::size_t>(n));
    detail::shifted_kernel(g, k, x.data(), y.data(), true);

    SpectralResult result;
    double lo = 0.0, hi = std::numeric_limits<double>::infinity();
    bool converged = false;
    int m = 0;
    while (m < cfg.max_iters) {
        ++m;
        // x <- y^[1/k], Linf-normalized so e_k values stay bounded by C(max_deg, k).
        double maxval = 0.0;
        for (int i = 0; i < n; ++i) {
            x[i] = kth_root(y[i], k);
            maxval = std::max(maxval, x[i]);
        }
        if (!std::isfinite(maxval))
            throw resource_error(
                "tensor application overflowed binary64 (k too large for this "
                "graph's degrees)");
        for (int i = 0; i < n; ++i) x[i] /= maxval;

        detail::shifted_kernel(g, k, x.data(), y.data(), true);

        lo = std::numeric_limits<double>::infinity();
        hi = 0.0;
        for (int i = 0; i < n; ++i) {
            if (x[i] <= 0.0) continue;
            const double xk = detail::ipow(x[i], k);
            if (xk <= 0.0) continue;  // k-th power underflowed
            const double ratio = y[i] / xk;
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        result.lower_history.push_back(lo);
        result.upper_history.push_back(hi);
        if (hi - lo <= cfg.tol * std::max(1.0, hi)) {
            converged = true;
            break;
        }
    }

    result.rho = lo - 1.0;
    result.vector = std::move(x);
    renormalize(result.vector, cfg.norm);
    result.lower = lo;
    result.upper = hi;
    result.iterations = m;
    result.converged = converged;
    return result;
}

SpectralResult spectral_radius_k(const Graph& g, const SpectralConfig& cfg) {
    validate_config(cfg);
    const int n = g.vertex_count();

    if (cfg.mode == SpectralMode::naive_whole_graph) {
        if (n == 0) {
            SpectralResult empty;
            empty.lower = empty.upper = 1.0;
            return empty;
        }
        return nqz_iterate(g, cfg);
    }

    SpectralResult result;
    result.vector.assign(static_cast<std::size_t>(n), 0.0);

    PeelResult peeled = peel(g, cfg.k);
    if (peeled.core.empty()) {
        // No vertex attains degree k anywhere, so the tensor restricted to any
        // candidate support is nilpotent: rho = 0 exactly.
        result.lower = result.upper = 1.0;
        return result;
    }

    InducedSubgraph core = induced_subgraph(g, peeled.core);
    for (const auto& members : connected_components(core.graph)) {
        InducedSubgraph piece = induced_subgraph(core.graph, members);
        SpectralResult local = nqz_iterate(piece.graph, cfg);

        ComponentSpectrum comp;
        comp.vertices.reserve(members.size());
        for (int v : members) comp.vertices.push_back(core.to_original[v]);
        comp.rho = local.rho;
        comp.lower = local.lower;
        comp.upper = local.upper;
        comp.iterations = local.iterations;
        comp.converged = local.converged;
        comp.lower_history = std::move(local.lower_history);
        comp.upper_history = std::move(local.upper_history);
        // local.vector is already normalized per cfg.norm over the component.
        comp.scores = std::move(local.vector);
        result.components.push_back(std::move(comp));
    }

    std::size_t argmax = 0;
    for (std::size_t c = 1; c < result.components.size(); ++c)
        if (result.components[c].rho > result.components[argmax].rho) argmax = c;
    const double rho_max = result.components[argmax].rho;
    const double tie_eps = 1e-9 * std::max(1.0, rho_max);

    result.rho = rho_max;
    result.lower = result.components[argmax].lower;
    result.upper = result.components[argmax].upper;
    result.lower_history = result.components[argmax].lower_history;
    result.upper_history = result.components[argmax].upper_history;

    result.converged = true;
    result.iterations = 0;
    for (const auto& comp : result.components) {
        result.converged = result.converged && comp.converged;
        result.iterations = std::max(result.iterations, comp.iterations);
        if (comp.rho < rho_max - tie_eps) continue;
        // Maximal-rho component (ties included): contributes its Perron
        // vector, rescaled to max entry 1 so tied components enter on equal
        // footing before the global renormalization.
        double peak = 0.0;
        for (double s : comp.scores) peak = std::max(peak, s);
        for (std::size_t i = 0; i < comp.vertices.size(); ++i)
            result.vector[comp.vertices[i]] = peak > 0.0 ? comp.scores[i] / peak : 0.0;
    }
    renormalize(result.vector, cfg.norm);
    return result;
}

CoreExistence core_exists_spectral(const Graph& g, int k, const SpectralConfig& cfg) {
    require(k >= 1, "core_exists_spectral: k must be >= 1");
    SpectralConfig local = cfg;
    local.k = k;

    CoreExistence out;
    SpectralResult spectrum = spectral_radius_k(g, local);
    out.rho = spectrum.rho;
    out.exists = spectrum.rho >= 1.0 - kExistenceEpsilon;

    bool core_nonempty = !peel(g, k).core.empty();
    out.peel_disagrees = out.exists != core_nonempty;
    return out;
}

std::vector<int> spectral_support(const SpectralResult& result, double threshold) {
    require(threshold >= 0.0, "spectral_support: threshold must be nonnegative");
    double peak = 0.0;
    for (double v : result.vector) peak = std::max(peak, v);
    std::vector<int> support;
    const double cut = threshold * peak;
    for (std::size_t i = 0; i < result.vector.size(); ++i)
        if (result.vector[i] > cut) support.push_back(static_cast<int>(i));
    return support;
}

}  // namespace corespectra
