#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "corespectra/dense_oracle.hpp"
#include "corespectra/errors.hpp"
#include "corespectra/tensor_ops.hpp"
#include "helpers.hpp"

using namespace corespectra;

TEST_CASE("build_dense: K3 tensor entries follow the definition") {
    Graph k3 = testutil::complete_graph(3);
    DenseTensor t = build_dense(k3, 2);
    CHECK(t.entries.size() == 27);

    // vertex 0's neighbors {1,2}: both orderings carry 1/2
    CHECK(t.at(std::vector<int>{0, 1, 2}) == 0.5);
    CHECK(t.at(std::vector<int>{0, 2, 1}) == 0.5);
    // repeated or non-neighbor indices are zero
    CHECK(t.at(std::vector<int>{0, 1, 1}) == 0.0);
    CHECK(t.at(std::vector<int>{0, 0, 1}) == 0.0);

    int nonzeros = 0;
    for (double e : t.entries) nonzeros += e != 0.0;
    CHECK(nonzeros == 6);  // one subset per vertex, two orderings each
}

TEST_CASE("build_dense: P3 has entries only at the middle vertex") {
    Graph p3 = testutil::path_graph(3);
    DenseTensor t = build_dense(p3, 2);
    CHECK(t.at(std::vector<int>{1, 0, 2}) == 0.5);
    CHECK(t.at(std::vector<int>{1, 2, 0}) == 0.5);
    int nonzeros = 0;
    for (double e : t.entries) nonzeros += e != 0.0;
    CHECK(nonzeros == 2);
}

TEST_CASE("build_dense: edgeless graph gives the zero tensor") {
    Graph empty = Graph::from_edges(3, {});
    DenseTensor t = build_dense(empty, 2);
    for (double e : t.entries) CHECK(e == 0.0);
}

TEST_CASE("build_dense enforces the size guard") {
    Graph big = testutil::complete_graph(60);
    CHECK_THROWS_AS(build_dense(big, 3), contract_error);
}

TEST_CASE("dense_apply: literal contraction on tiny graphs") {
    Graph k3 = testutil::complete_graph(3);
    DenseTensor t = build_dense(k3, 2);
    std::vector<double> ones(3, 1.0);
    for (double v : dense_apply(t, ones)) CHECK(v == doctest::Approx(1.0));

    std::vector<double> zero(3, 0.0);
    for (double v : dense_apply(t, zero)) CHECK(v == 0.0);

    Graph p3 = testutil::path_graph(3);
    DenseTensor tp = build_dense(p3, 2);
    std::vector<double> abc{0.3, 0.9, 1.7};
    auto out = dense_apply(tp, abc);
    CHECK(out[0] == 0.0);
    CHECK(out[1] == doctest::Approx(0.3 * 1.7).epsilon(1e-15));
    CHECK(out[2] == 0.0);
}

TEST_CASE("verify_eigenpair on closed-form pairs") {
    Graph k4 = testutil::complete_graph(4);
    DenseTensor t = build_dense(k4, 2);
    std::vector<double> uniform(4, 0.5);
    CHECK(verify_eigenpair(t, 3.0, uniform, 1e-12));
    CHECK(!verify_eigenpair(t, 2.0, uniform, 1e-12));

    Graph c5 = testutil::cycle_graph(5);
    DenseTensor tc = build_dense(c5, 2);
    std::vector<double> u5(5, 1.0);
    CHECK(verify_eigenpair(tc, 1.0, u5, 1e-12));

    std::vector<double> zero(4, 0.0);
    CHECK_THROWS_AS(verify_eigenpair(t, 1.0, zero, 1e-12), contract_error);
}

TEST_CASE("tensor is symmetric in its trailing indices") {
    std::mt19937_64 rng(61);
    Graph g = testutil::gnp(6, 0.5, rng);
    DenseTensor t = build_dense(g, 3);
    std::vector<int> idx(4);
    for (int trial = 0; trial < 200; ++trial) {
        for (int& i : idx) i = static_cast<int>(rng() % 6);
        double ref = t.at(idx);
        std::vector<int> tail(idx.begin() + 1, idx.end());
        std::sort(tail.begin(), tail.end());
        do {
            std::vector<int> probe{idx[0]};
            probe.insert(probe.end(), tail.begin(), tail.end());
            CHECK(t.at(probe) == ref);
        } while (std::next_permutation(tail.begin(), tail.end()));
    }
}

TEST_CASE("implicit kernel equals the dense contraction on random graphs") {
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<int> pick_n(2, 10);
    std::uniform_int_distribution<int> pick_k(1, 3);
    std::uniform_real_distribution<double> pick_p(0.1, 0.9);
    for (int trial = 0; trial < 40; ++trial) {
        int n = pick_n(rng);
        int k = pick_k(rng);
        Graph g = testutil::gnp(n, pick_p(rng), rng);
        DenseTensor t = build_dense(g, k);
        for (int rep = 0; rep < 3; ++rep) {
            auto x = testutil::random_nonnegative(n, rng);
            auto fast = apply_k(g, k, x);
            auto slow = dense_apply(t, x);
            for (int i = 0; i < n; ++i)
                CHECK(std::abs(fast[i] - slow[i]) <= 1e-12);
        }
    }
}
