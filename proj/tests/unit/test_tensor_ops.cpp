#include <doctest.h>

#include <cmath>
#include <random>

#include "corespectra/errors.hpp"
#include "corespectra/spectral.hpp"
#include "corespectra/tensor_ops.hpp"
#include "helpers.hpp"

using namespace corespectra;

TEST_CASE("apply_k: all-ones neighbor values give binomial counts") {
    // vertex with 3 neighbors, k=2 -> C(3,2) = 3
    Graph star3 = testutil::star_graph(3);
    std::vector<double> ones(4, 1.0);
    auto out = apply_k(star3, 2, ones);
    CHECK(out[0] == 3.0);
    CHECK(out[1] == 0.0);  // leaves have degree 1 < 2
}

TEST_CASE("apply_k: e_2 of specific neighbor values") {
    // center 0 adjacent to 1,2,3 carrying 0.5, 2.0, 1.0
    Graph star3 = testutil::star_graph(3);
    std::vector<double> x{0.0, 0.5, 2.0, 1.0};
    auto out = apply_k(star3, 2, x);
    // 0.5*2 + 0.5*1 + 2*1 = 3.5, enumerated over all 2-subsets
    CHECK(out[0] == doctest::Approx(3.5).epsilon(1e-15));
}

TEST_CASE("apply_k: star K_{1,5} at k=2 hits only the center") {
    Graph star5 = testutil::star_graph(5);
    std::vector<double> ones(6, 1.0);
    auto out = apply_k(star5, 2, ones);
    CHECK(out[0] == 10.0);  // C(5,2)
    for (int leaf = 1; leaf <= 5; ++leaf) CHECK(out[leaf] == 0.0);
}

TEST_CASE("apply_k validates its arguments") {
    Graph p3 = testutil::path_graph(3);
    std::vector<double> wrong_len(2, 1.0);
    CHECK_THROWS_AS(apply_k(p3, 2, wrong_len), contract_error);
    std::vector<double> negative{1.0, -0.5, 1.0};
    CHECK_THROWS_AS(apply_k(p3, 2, negative), contract_error);
    std::vector<double> ok(3, 1.0);
    CHECK_THROWS_AS(apply_k(p3, 0, ok), contract_error);
}

TEST_CASE("shifted_apply adds the entrywise k-th power") {
    Graph k3 = testutil::complete_graph(3);
    std::vector<double> zero(3, 0.0);
    for (double v : shifted_apply(k3, 2, zero)) CHECK(v == 0.0);

    std::vector<double> ones(3, 1.0);
    for (double v : shifted_apply(k3, 2, ones)) CHECK(v == 2.0);

    Graph isolated = Graph::from_edges(1, {});
    std::vector<double> x{0.7};
    auto out = shifted_apply(isolated, 3, x);
    CHECK(out[0] == doctest::Approx(0.7 * 0.7 * 0.7).epsilon(1e-15));
}

TEST_CASE("degree-k homogeneity: apply_k(c x) = c^k apply_k(x)") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testutil::gnp(4 + trial % 10, 0.5, rng);
        const int k = 1 + trial % 3;
        auto x = testutil::random_nonnegative(g.vertex_count(), rng);
        const double c = 0.25 + (trial % 7) * 0.5;

        std::vector<double> cx(x);
        for (double& v : cx) v *= c;

        auto lhs = apply_k(g, k, cx);
        auto rhs = apply_k(g, k, x);
        const double ck = detail::ipow(c, k);
        for (int i = 0; i < g.vertex_count(); ++i)
            CHECK(lhs[i] == doctest::Approx(ck * rhs[i]).epsilon(1e-12));
    }
}

TEST_CASE("permutation equivariance of apply_k") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = testutil::gnp(8, 0.4, rng);
        const int k = 1 + trial % 3;
        auto x = testutil::random_nonnegative(8, rng);

        std::vector<int> perm(8);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);

        // relabeled graph: edge (u,v) -> (perm[u], perm[v])
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 8; ++u)
            for (int v : g.neighbors(u))
                if (u < v) edges.emplace_back(perm[u], perm[v]);
        Graph h = Graph::from_edges(8, std::move(edges));

        std::vector<double> xp(8);
        for (int i = 0; i < 8; ++i) xp[perm[i]] = x[i];

        auto out_g = apply_k(g, k, x);
        auto out_h = apply_k(h, k, xp);
        for (int i = 0; i < 8; ++i)
            CHECK(out_h[perm[i]] == doctest::Approx(out_g[i]).epsilon(1e-12));

        SpectralConfig cfg;
        cfg.k = k;
        double rho_g = spectral_radius_k(g, cfg).rho;
        double rho_h = spectral_radius_k(h, cfg).rho;
        CHECK(rho_h == doctest::Approx(rho_g).epsilon(1e-9));
    }
}

TEST_CASE("parallel apply_k is bitwise identical to the serial reference") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 5; ++trial) {
        // large enough to cross the parallel cutoff
        Graph g = testutil::gnp(600, 0.02, rng);
        const int k = 1 + trial % 4;
        auto x = testutil::random_nonnegative(g.vertex_count(), rng);
        CHECK(apply_k(g, k, x) == apply_k_serial(g, k, x));
    }
}
