#ifndef CORESPECTRA_DENSE_ORACLE_HPP
#define CORESPECTRA_DENSE_ORACLE_HPP

#include <span>
#include <vector>

#include "corespectra/graph.hpp"

namespace corespectra {

// Explicitly materialized order-(k+1) adjacency tensor for tiny graphs.
// Reference implementation used to validate the implicit kernel; not a
// performance path.
struct DenseTensor {
    int order = 0;  // k + 1
    int dim = 0;    // n
    std::vector<double> entries;  // row-major over `order` indices in [0, dim)

    std::size_t flat_index(std::span<const int> idx) const;
    double at(std::span<const int> idx) const { return entries[flat_index(idx)]; }
};

// Entry (i, i2..ik+1) is 1/k! exactly when {i2..ik+1} is a set of k distinct
// neighbors of i, else 0. Guarded to n^(k+1) <= 1e7 total entries.
DenseTensor build_dense(const Graph& g, int k);

// Literal contraction: out[i] = sum over all index tuples of
// a_{i i2..ik+1} * x[i2] * ... * x[ik+1]. No shortcuts.
std::vector<double> dense_apply(const DenseTensor& t, std::span<const double> x);

// True iff max_i |(A x^k)_i - lambda * x_i^k| <= tol.
bool verify_eigenpair(const DenseTensor& t, double lambda,
                      std::span<const double> x, double tol);

}  // namespace corespectra

#endif
