#include "corespectra/dense_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "corespectra/errors.hpp"
#include "corespectra/tensor_ops.hpp"

namespace corespectra {

std::size_t DenseTensor::flat_index(std::span<const int> idx) const {
    require(static_cast<int>(idx.size()) == order, "DenseTensor: wrong index arity");
    std::size_t flat = 0;
    for (int i : idx) {
        require(i >= 0 && i < dim, "DenseTensor: index out of range");
        flat = flat * static_cast<std::size_t>(dim) + static_cast<std::size_t>(i);
    }
    return flat;
}

DenseTensor build_dense(const Graph& g, int k) {
    require(k >= 1, "build_dense: k must be >= 1");
    const int n = g.vertex_count();

    constexpr std::size_t kMaxEntries = 10'000'000;
    std::size_t total = 1;
    for (int i = 0; i < k + 1; ++i) {
        if (n == 0) {
            total = 0;
            break;
        }
        require(total <= kMaxEntries / static_cast<std::size_t>(n),
                "build_dense: n^(k+1) exceeds the size guard");
        total *= static_cast<std::size_t>(n);
    }

    DenseTensor t;
    t.order = k + 1;
    t.dim = n;
    t.entries.assign(total, 0.0);

    double inv_kfact = 1.0;
    for (int i = 2; i <= k; ++i) inv_kfact /= i;

    std::vector<int> idx(static_cast<std::size_t>(k) + 1);
    std::vector<int> subset(static_cast<std::size_t>(k));
    for (int v = 0; v < n; ++v) {
        auto nbrs = g.neighbors(v);
        const int d = static_cast<int>(nbrs.size());
        if (d < k) continue;
        // Every k-subset of N(v), then every ordering of the subset.
        std::vector<int> choose(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) choose[i] = i;
        while (true) {
            for (int i = 0; i < k; ++i) subset[i] = nbrs[choose[i]];
            std::sort(subset.begin(), subset.end());
            do {
                idx[0] = v;
                std::copy(subset.begin(), subset.end(), idx.begin() + 1);
                t.entries[t.flat_index(idx)] = inv_kfact;
            } while (std::next_permutation(subset.begin(), subset.end()));

            int i = k - 1;
            while (i >= 0 && choose[i] == d - k + i) --i;
            if (i < 0) break;
            ++choose[i];
            for (int j = i + 1; j < k; ++j) choose[j] = choose[j - 1] + 1;
        }
    }
    return t;
}

std::vector<double> dense_apply(const DenseTensor& t, std::span<const double> x) {
    require(static_cast<int>(x.size()) == t.dim,
            "dense_apply: vector length must equal tensor dimension");
    const int n = t.dim;
    const int k = t.order - 1;
    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    if (n == 0) return out;

    std::vector<int> tuple(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < n; ++i) {
        std::fill(tuple.begin(), tuple.end(), 0);
        double sum = 0.0;
        const std::size_t row = static_cast<std::size_t>(i) *
                                (t.entries.size() / static_cast<std::size_t>(n));
        while (true) {
            std::size_t flat = 0;
            double prod = 1.0;
            for (int j = 0; j < k; ++j) {
                flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(tuple[j]);
                prod *= x[tuple[j]];
            }
            sum += t.entries[row + flat] * prod;

            int j = k - 1;
            while (j >= 0 && tuple[j] == n - 1) tuple[j--] = 0;
            if (j < 0) break;
            ++tuple[j];
        }
        out[i] = sum;
    }
    return out;
}

bool verify_eigenpair(const DenseTensor& t, double lambda,
                      std::span<const double> x, double tol) {
    bool nonzero = false;
    for (double value : x) nonzero = nonzero || value != 0.0;
    require(nonzero, "verify_eigenpair: x must be nonzero");

    std::vector<double> lhs = dense_apply(t, x);
    double worst = 0.0;
    for (int i = 0; i < t.dim; ++i)
        worst = std::max(worst, std::abs(lhs[i] - lambda * detail::ipow(x[i], t.order - 1)));
    return worst <= tol;
}

}  // namespace corespectra
