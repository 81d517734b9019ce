#ifndef CORESPECTRA_TENSOR_OPS_HPP
#define CORESPECTRA_TENSOR_OPS_HPP

#include <span>
#include <vector>

#include "corespectra/graph.hpp"

namespace corespectra {

// Implicit application of the order-(k+1) adjacency tensor of g to x:
//
//   out[i] = e_k({x[j] : j in N(i)})
//
// the degree-k elementary symmetric polynomial over the neighbor values of i,
// evaluated by the coefficient recurrence of prod_j (1 + x[j] t). The tensor
// is never materialized. out[i] = 0 whenever deg(i) < k. Entries of x must be
// nonnegative, which makes the recurrence addition-only.
//
// apply_k runs the vertex loop in parallel when OpenMP is enabled; each
// output coordinate is computed independently in fixed (sorted-adjacency)
// summation order, so the result is bitwise identical to apply_k_serial.
std::vector<double> apply_k(const Graph& g, int k, std::span<const double> x);

// Plain serial reference for the same contraction, kept for tests and
// benchmarks.
std::vector<double> apply_k_serial(const Graph& g, int k, std::span<const double> x);

// Shifted application: apply_k(g, k, x) + x^[k] (entrywise k-th power).
// The identity term contributes x[i]^k to coordinate i.
std::vector<double> shifted_apply(const Graph& g, int k, std::span<const double> x);

namespace detail {

// x^k by repeated multiplication; exact operation sequence independent of
// libm.
inline double ipow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

// Unchecked kernels used by the iteration loop after one-time validation.
void apply_kernel(const Graph& g, int k, const double* x, double* out, bool parallel);
void shifted_kernel(const Graph& g, int k, const double* x, double* out, bool parallel);

}  // namespace detail

}  // namespace corespectra

#endif
