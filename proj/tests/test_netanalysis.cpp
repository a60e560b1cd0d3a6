#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "linkrank/netanalysis.hpp"

#include "support/dense_oracle.hpp"

using namespace linkrank;

#ifndef LINKRANK_TEST_DATA_DIR
#define LINKRANK_TEST_DATA_DIR "tests/data"
#endif

namespace {

std::string edge_list_text(const Network& net) {
    std::ostringstream out;
    write_edge_list(out, net);
    return out.str();
}

long total_edges(const Network& net) { return static_cast<long>(net.edges().size()); }

} // namespace

TEST_CASE("growth generator bookkeeping") {
    SUBCASE("edge count formula and handshake") {
        for (const int m : {1, 2, 3}) {
            const auto history = generate_ba(40, m, 9);
            const auto& net = history.final_network();
            const long clique_edges = static_cast<long>(m) * (m - 1) / 2;
            CHECK(total_edges(net) == clique_edges + static_cast<long>(40 - m) * m);
            const auto deg = degree_summary(net.adjacency(), false);
            double sum = 0.0;
            for (double d : deg.total_degree)
                sum += d;
            CHECK(sum == doctest::Approx(2.0 * total_edges(net)));
        }
    }
    SUBCASE("snapshots are nested prefixes") {
        const auto history = generate_ba(64, 2, 11);
        REQUIRE(history.snapshots.size() >= 2);
        for (std::size_t s = 0; s + 1 < history.snapshots.size(); ++s) {
            const auto& a = history.snapshots[s];
            const auto& b = history.snapshots[s + 1];
            CHECK(a.vertex_count() <= b.vertex_count());
            for (int i = 0; i < a.vertex_count(); ++i)
                CHECK(b.index_of(a.id_of(i)) >= 0);
            CHECK(total_edges(a) <= total_edges(b));
        }
        CHECK(history.final_network().vertex_count() == 64);
    }
    SUBCASE("same seed regenerates identical bytes, different seed differs") {
        const auto a = generate_ba(60, 2, 123);
        const auto b = generate_ba(60, 2, 123);
        const auto c = generate_ba(60, 2, 124);
        CHECK(edge_list_text(a.final_network()) == edge_list_text(b.final_network()));
        CHECK(edge_list_text(a.final_network()) != edge_list_text(c.final_network()));
    }
    SUBCASE("parameter violations") {
        CHECK_THROWS_AS(generate_ba(3, 3, 1), std::invalid_argument);
        CHECK_THROWS_AS(generate_ba(10, 0, 1), std::invalid_argument);
    }
    SUBCASE("symmetrize doubles the arcs") {
        GrowthOptions opt;
        opt.symmetrize = true;
        const auto history = generate_growth(30, 2, 5, opt);
        const auto deg = degree_summary(history.final_network().adjacency(), false);
        for (int i = 0; i < 30; ++i)
            CHECK(deg.in_degree[i] == deg.out_degree[i]);
    }
}

TEST_CASE("growth generator golden file") {
    const auto history = generate_ba(5, 1, 42);
    std::ifstream golden(std::string(LINKRANK_TEST_DATA_DIR) + "/ba_n5_m1_s42.tsv");
    REQUIRE_MESSAGE(golden.good(), "golden fixture missing");
    std::stringstream expected;
    expected << golden.rdbuf();
    CHECK(edge_list_text(history.final_network()) == expected.str());
}

TEST_CASE("random graph generator") {
    SUBCASE("determinism per seed") {
        const auto a = generate_er(40, 0.1, 7);
        const auto b = generate_er(40, 0.1, 7);
        CHECK(edge_list_text(a) == edge_list_text(b));
    }
    SUBCASE("edge count tracks the binomial mean over seeds") {
        const int n = 60;
        const double p = 0.08;
        const double trials = static_cast<double>(n) * (n - 1);
        double worst = 0.0;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto net = generate_er(n, p, seed);
            const double expected = trials * p;
            const double sd = std::sqrt(trials * p * (1 - p));
            worst = std::max(worst, std::abs(total_edges(net) - expected) / sd);
        }
        CHECK(worst < 4.0);
    }
    SUBCASE("tiny probability leaves most vertices isolated") {
        const auto net = generate_er(50, 0.001, 3);
        const auto deg = degree_summary(net.adjacency(), false);
        int isolated = 0;
        for (double d : deg.total_degree)
            isolated += d == 0.0;
        CHECK(isolated > 25);
    }
    SUBCASE("parameter violations") {
        CHECK_THROWS_AS(generate_er(10, 0.0, 1), std::invalid_argument);
        CHECK_THROWS_AS(generate_er(10, 1.0, 1), std::invalid_argument);
    }
}

TEST_CASE("crawl-shaped generator has heavy tails on both sides") {
    const auto net = generate_webgraph(3000, 8.0, 19);
    CHECK(net.vertex_count() == 3000);
    const auto deg = degree_summary(net.adjacency(), false);
    double max_in = 0.0, max_out = 0.0;
    for (int i = 0; i < net.vertex_count(); ++i) {
        max_in = std::max(max_in, deg.in_degree[i]);
        max_out = std::max(max_out, deg.out_degree[i]);
    }
    const double avg = 2.0 * static_cast<double>(net.adjacency().nonzeros()) / 3000.0;
    CHECK(avg > 3.0);
    CHECK(max_in > 10 * avg);
    CHECK(max_out > 10 * avg);
    CHECK(edge_list_text(net) == edge_list_text(generate_webgraph(3000, 8.0, 19)));
}

TEST_CASE("degree profile") {
    SUBCASE("regular graph flags the exponent undefined") {
        std::vector<EdgeRecord> rows;
        for (int i = 0; i < 6; ++i)
            rows.push_back({std::to_string(i), std::to_string((i + 1) % 6), 1.0, ""});
        const auto p = degree_profile(ingest_edge_list(rows, NetworkMode::Www),
                                      DegreeDirection::Total);
        CHECK(p.histogram.size() == 1);
        CHECK_FALSE(p.gamma_defined);
    }
    SUBCASE("histogram totals the vertex count and p_k sums to one") {
        const auto net = generate_er(300, 0.02, 5);
        const auto p = degree_profile(net, DegreeDirection::Total);
        long total = 0;
        for (const auto& [k, c] : p.histogram)
            total += c;
        CHECK(total == 300);
        double psum = 0.0, mean = 0.0;
        for (const auto& [k, f] : p.frequencies) {
            psum += f;
            mean += k * f;
        }
        CHECK(psum == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(mean == doctest::Approx(p.mean_degree).epsilon(1e-12));
    }
    SUBCASE("in/out directions are honoured") {
        const auto net = ingest_edge_list(
            std::vector<EdgeRecord>{{"A", "B", 1.0, ""}, {"C", "B", 1.0, ""}}, NetworkMode::Www);
        const auto in = degree_profile(net, DegreeDirection::In, 1, 1);
        CHECK(in.histogram.at(2) == 1);  // B
        CHECK(in.histogram.at(0) == 2);
        const auto out = degree_profile(net, DegreeDirection::Out, 1, 1);
        CHECK(out.histogram.at(1) == 2);
        CHECK(out.histogram.at(0) == 1);
    }
    SUBCASE("attachment-rich graphs fit a power law in the expected band") {
        const auto net = generate_ba(10000, 3, 1).final_network();
        const auto p = degree_profile(net, DegreeDirection::Total);
        REQUIRE(p.gamma_defined);
        CHECK(p.gamma > 2.0);
        CHECK(p.gamma < 3.5);
        CHECK(p.powerlaw_loglik > p.poisson_loglik);
    }
    SUBCASE("random graphs prefer the Poisson model") {
        const auto net = generate_er(10000, 4.0 / 9999.0, 2);
        const auto p = degree_profile(net, DegreeDirection::Total);
        REQUIRE(p.gamma_defined);
        CHECK(p.poisson_loglik > p.powerlaw_loglik);
        CHECK(p.mean_degree == doctest::Approx(8.0).epsilon(0.1));
    }
    SUBCASE("too-small networks rejected") {
        const auto net = make_network({"solo"}, std::vector<EdgeRecord>{}, NetworkMode::Www);
        CHECK_THROWS_AS(degree_profile(net, DegreeDirection::Total), std::invalid_argument);
    }
}

TEST_CASE("attachment exponent") {
    SUBCASE("preferential growth sits near one") {
        const auto v = pa_exponent(generate_ba(10000, 3, 4));
        CHECK(v > 0.8);
        CHECK(v < 1.2);
    }
    SUBCASE("uniform growth sits near zero") {
        GrowthOptions opt;
        opt.attachment = AttachmentRule::Uniform;
        const auto v = pa_exponent(generate_growth(10000, 3, 4, opt));
        CHECK(v > -0.2);
        CHECK(v < 0.2);
    }
    SUBCASE("single snapshot is rejected") {
        GrowthOptions opt;
        opt.snapshot_sizes = {100};
        const auto history = generate_growth(100, 2, 1, opt);
        REQUIRE(history.snapshots.size() == 1);
        CHECK_THROWS_AS(pa_exponent(history), std::invalid_argument);
    }
    SUBCASE("insufficient bins reported with the count") {
        // tiny history: degree range too narrow for 5 half-octave bins
        GrowthOptions opt;
        opt.snapshot_sizes = {8, 10};
        const auto history = generate_growth(10, 1, 2, opt);
        CHECK_THROWS_WITH_AS(pa_exponent(history), doctest::Contains("bins"),
                             std::runtime_error);
    }
    SUBCASE("invariant under relabeling") {
        const auto history = generate_ba(2000, 2, 8);
        const auto v1 = pa_exponent(history);
        GrowthHistory renamed;
        for (const auto& snap : history.snapshots) {
            std::vector<std::string> ids;
            for (const auto& id : snap.vertex_ids())
                ids.push_back("x" + id);
            std::vector<EdgeRecord> records;
            for (const auto& r : snap.to_records())
                records.push_back({"x" + r.source, "x" + r.target, r.weight, r.resource});
            renamed.snapshots.push_back(make_network(ids, records, NetworkMode::Www));
        }
        const auto v2 = pa_exponent(renamed);
        CHECK(v1 == doctest::Approx(v2).epsilon(1e-12));
    }
}
