#include <doctest.h>

#include "linkrank/hits.hpp"
#include "linkrank/netanalysis.hpp"
#include "linkrank/traderank.hpp"

#include "support/dense_oracle.hpp"

using namespace linkrank;

namespace {

// Dense authority/hub operators with arbitrary diagonal weights, assembled
// independently: zeta * diag(ca) * B^T * diag(ch) * B + smoothing, where B
// is the adjacency (authority chain) or its transpose (hub chain).
oracle::Dense oracle_chain_operator(const oracle::Dense& adj, const std::vector<double>& pre,
                                    const std::vector<double>& post, bool authority,
                                    double zeta) {
    const int n = static_cast<int>(adj.size());
    const auto fwd = adj;
    const auto bwd = oracle::dense_transpose(adj);
    const auto& first = authority ? bwd : fwd;
    const auto& second = authority ? fwd : bwd;
    oracle::Dense op = oracle::zeros(n, n);
    // op = diag(pre) * first * diag(post) * second
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const double a = pre[i] * first[i][k] * post[k];
            if (a == 0.0)
                continue;
            for (int j = 0; j < n; ++j)
                op[i][j] += a * second[k][j];
        }
    return oracle::dense_smooth(op, zeta);
}

} // namespace

TEST_CASE("star graph: authority concentrates on the center, hubs tie") {
    std::vector<EdgeRecord> rows;
    const int leaves = 5;
    for (int i = 0; i < leaves; ++i)
        rows.push_back({"leaf" + std::to_string(i), "center", 1.0, ""});
    const auto net = ingest_edge_list(rows, NetworkMode::Www);
    const auto r = hits(net, {});
    const int center = net.index_of("center");
    for (int i = 0; i < net.vertex_count(); ++i) {
        if (i == center)
            continue;
        CHECK(r.authority.scores[center] > r.authority.scores[i]);
    }
    const double hub0 = r.hub.scores[net.index_of("leaf0")];
    for (int i = 1; i < leaves; ++i)
        CHECK(r.hub.scores[net.index_of("leaf" + std::to_string(i))] ==
              doctest::Approx(hub0).epsilon(1e-10));
}

TEST_CASE("two-cycle is symmetric in both scores") {
    const auto net = ingest_edge_list(
        std::vector<EdgeRecord>{{"A", "B", 1.0, ""}, {"B", "A", 1.0, ""}}, NetworkMode::Www);
    const auto r = hits(net, {});
    CHECK(r.authority.scores[0] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(r.authority.scores[1] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(r.hub.scores[0] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(r.hub.scores[1] == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("fixed four-vertex graph matches the dense oracle") {
    const std::vector<EdgeRecord> rows{{"A", "B", 1.0, ""}, {"A", "C", 1.0, ""},
                                       {"B", "C", 1.0, ""}, {"D", "C", 1.0, ""},
                                       {"C", "A", 1.0, ""}};
    const auto net = ingest_edge_list(rows, NetworkMode::Www);
    RunConfig cfg;
    const auto r = hits(net, cfg);

    const auto adj = oracle::dense_adjacency(net, true);
    const std::vector<double> unit(4, 1.0);
    const auto auth_op = oracle_chain_operator(adj, unit, unit, true, cfg.zeta);
    const auto hub_op = oracle_chain_operator(adj, unit, unit, false, cfg.zeta);
    CHECK(oracle::diff_1norm(r.authority.scores,
                             oracle::dense_power(auth_op, 1e-12, 100000).scores) < 1e-8);
    CHECK(oracle::diff_1norm(r.hub.scores, oracle::dense_power(hub_op, 1e-12, 100000).scores) <
          1e-8);
}

TEST_CASE("random graphs match the dense oracle for both variants") {
    oracle::TestRng rng(53);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 3 + rng.below(12);
        const auto rows = oracle::random_edges(n, 0.35, false, rng);
        if (rows.empty())
            continue;
        const auto net = ingest_edge_list(rows, NetworkMode::Www);
        RunConfig cfg;
        cfg.tolerance = 1e-11;  // the fixed-point gap must be well below the 1e-8 match bound
        const int nv = net.vertex_count();
        const auto adj = oracle::dense_adjacency(net, true);

        const auto classic = hits(net, cfg);
        const std::vector<double> unit(nv, 1.0);
        const auto classic_expected =
            oracle::dense_power(oracle_chain_operator(adj, unit, unit, true, cfg.zeta), 1e-12,
                                200000);
        CHECK(oracle::diff_1norm(classic.authority.scores, classic_expected.scores) < 1e-8);

        const auto accel = hits_accelerated(net, cfg);
        const auto counts = degree_summary(net.ranking_adjacency(), false);
        const auto sc = oracle::scalar_constants(counts.in_degree, counts.out_degree);
        const auto accel_expected = oracle::dense_power(
            oracle_chain_operator(adj, sc.ca, sc.ch, true, cfg.zeta), 1e-12, 200000);
        CHECK(oracle::diff_1norm(accel.authority.scores, accel_expected.scores) < 1e-8);
    }
}

TEST_CASE("unit weights reduce the accelerated path to classic HITS") {
    oracle::TestRng rng(59);
    const auto rows = oracle::random_edges(9, 0.3, false, rng);
    const auto net = ingest_edge_list(rows, NetworkMode::Www);
    RunConfig cfg;
    const auto classic = hits(net, cfg);
    const std::vector<double> unit(net.vertex_count(), 1.0);
    const auto weighted = hits_with_weights(net.ranking_adjacency(), unit, unit, cfg);
    CHECK(oracle::diff_1norm(classic.authority.scores, weighted.authority.scores) == 0.0);
    CHECK(oracle::diff_1norm(classic.hub.scores, weighted.hub.scores) == 0.0);
}

TEST_CASE("balanced in/out degrees make both variants agree") {
    // two directed cycles sharing no structure advantage: indeg=outdeg=1
    std::vector<EdgeRecord> rows;
    for (int i = 0; i < 5; ++i)
        rows.push_back({std::to_string(i), std::to_string((i + 1) % 5), 1.0, ""});
    for (int i = 5; i < 8; ++i)
        rows.push_back({std::to_string(i), std::to_string(i == 7 ? 5 : i + 1), 1.0, ""});
    const auto net = ingest_edge_list(rows, NetworkMode::Www);
    RunConfig cfg;
    const auto classic = hits(net, cfg);
    const auto accel = hits_accelerated(net, cfg);
    CHECK(oracle::diff_1norm(classic.authority.scores, accel.authority.scores) <
          10 * cfg.tolerance);
    CHECK(oracle::diff_1norm(classic.hub.scores, accel.hub.scores) < 10 * cfg.tolerance);
}

TEST_CASE("both variants are permutation equivariant") {
    oracle::TestRng rng(61);
    const auto rows = oracle::random_edges(7, 0.4, false, rng);
    auto renamed = rows;
    for (auto& r : renamed) {
        r.source = "p" + r.source;
        r.target = "p" + r.target;
    }
    std::reverse(renamed.begin(), renamed.end());
    const auto net = ingest_edge_list(rows, NetworkMode::Www);
    const auto net2 = ingest_edge_list(renamed, NetworkMode::Www);
    RunConfig cfg;
    for (const bool accelerated : {false, true}) {
        const auto r1 = accelerated ? hits_accelerated(net, cfg) : hits(net, cfg);
        const auto r2 = accelerated ? hits_accelerated(net2, cfg) : hits(net2, cfg);
        for (int i = 0; i < net.vertex_count(); ++i) {
            const int j = net2.index_of("p" + net.id_of(i));
            REQUIRE(j >= 0);
            CHECK(r1.authority.scores[i] == doctest::Approx(r2.authority.scores[j]).epsilon(1e-7));
            CHECK(r1.hub.scores[i] == doctest::Approx(r2.hub.scores[j]).epsilon(1e-7));
        }
    }
}

TEST_CASE("accelerated variant speeds up a crawl-shaped graph") {
    const auto net = generate_webgraph(2000, 6.0, 7);
    RunConfig cfg;
    const auto classic = hits(net, cfg);
    const auto accel = hits_accelerated(net, cfg);
    REQUIRE(classic.authority.converged);
    REQUIRE(accel.authority.converged);
    CHECK(accel.authority.iterations <= classic.authority.iterations);
}
