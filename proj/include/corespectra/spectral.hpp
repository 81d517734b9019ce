#ifndef CORESPECTRA_SPECTRAL_HPP
#define CORESPECTRA_SPECTRAL_HPP

#include <span>
#include <vector>

#include "corespectra/graph.hpp"

namespace corespectra {

enum class Norm { L1, L2, Linf };

enum class SpectralMode {
    per_component,     // peel to the k-core, iterate on each connected piece
    naive_whole_graph  // run the shifted iteration verbatim on all of G
};

struct SpectralConfig {
    int k = 1;
    double tol = 1e-10;        // relative bracket-gap stopping tolerance
    int max_iters = 10000;
    Norm norm = Norm::L2;      // normalization of the reported vector
    SpectralMode mode = SpectralMode::per_component;
};

// Existence threshold: rho >= 1 - kExistenceEpsilon counts as "has a k-core".
// Boundary graphs (cycles, complete graphs K_{k+1}) sit exactly at rho = 1.
inline constexpr double kExistenceEpsilon = 1e-6;

// One connected piece of the k-core with its own iteration outcome.
// vertices are original graph ids (sorted); scores align with vertices and
// are normalized per the configured norm within the component.
struct ComponentSpectrum {
    std::vector<int> vertices;
    std::vector<double> scores;
    double rho = 0.0;
    double lower = 0.0;  // final lambda lower bound (shifted scale, rho = lower - 1)
    double upper = 0.0;
    int iterations = 0;
    bool converged = false;
    std::vector<double> lower_history;  // one entry per iteration
    std::vector<double> upper_history;
};

struct SpectralResult {
    double rho = 0.0;
    std::vector<double> vector;  // per-vertex scores in original indexing
    double lower = 0.0;          // lambda-scale bounds of the run that set rho
    double upper = 0.0;
    int iterations = 0;
    bool converged = true;
    std::vector<ComponentSpectrum> components;  // per-component mode only
    std::vector<double> lower_history;
    std::vector<double> upper_history;
};

// Shifted power iteration on the (k+1)-order adjacency tensor of g, started
// from the all-ones vector:
//
//   y = apply_k(x) + x^[k];  x <- y^[1/k] / ||y^[1/k]||_inf
//   lambda_lo = min_{x_i>0} y_i / x_i^k,  lambda_hi = max_{x_i>0} y_i / x_i^k
//
// stopping when (hi - lo) <= tol * max(1, hi) or at max_iters. rho is
// reported as lambda_lo - 1. Non-convergence is flagged, not thrown, with the
// final bracket retained. Intended for graphs whose tensor is weakly
// irreducible (connected, min degree >= k); naive mode calls it on anything.
SpectralResult nqz_iterate(const Graph& g, const SpectralConfig& cfg);

// Spectral radius of the k-adjacency tensor of g.
//
// per_component mode peels to the k-core first: an empty core yields rho = 0
// with a zero vector; otherwise each connected core component is iterated
// independently, rho is the max over components, and the reported vector is
// supported on the maximal-rho components (ties included), renormalized per
// cfg.norm. naive mode defers entirely to nqz_iterate on g.
SpectralResult spectral_radius_k(const Graph& g, const SpectralConfig& cfg);

struct CoreExistence {
    bool exists = false;
    double rho = 0.0;
    // Set when the spectral verdict contradicts combinatorial peeling; callers
    // surface this as a warning.
    bool peel_disagrees = false;
};

// Existence test: a k-core exists iff rho_k(G) >= 1, checked against
// kExistenceEpsilon and cross-validated against peel.
CoreExistence core_exists_spectral(const Graph& g, int k, const SpectralConfig& cfg);

// Indices with vector entry > threshold * max entry (relative cut).
std::vector<int> spectral_support(const SpectralResult& result,
                                  double threshold = 1e-12);

}  // namespace corespectra

#endif
