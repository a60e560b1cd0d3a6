#include "linkrank/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "linkrank/hits.hpp"
#include "linkrank/pagerank.hpp"
#include "linkrank/traderank.hpp"

namespace linkrank {

Ordering ordering_of(std::span<const double> scores) {
    const int n = static_cast<int>(scores.size());
    std::vector<int> by_score(n);
    std::iota(by_score.begin(), by_score.end(), 0);
    std::sort(by_score.begin(), by_score.end(), [&](int a, int b) {
        if (scores[a] != scores[b])
            return scores[a] > scores[b];
        return a < b;
    });
    Ordering o;
    o.ranks.resize(n);
    for (int pos = 0; pos < n; ++pos)
        o.ranks[by_score[pos]] = pos + 1;
    return o;
}

double cosine(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw std::invalid_argument("cosine: dimension mismatch");
    double dot = 0.0, nx = 0.0, ny = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        dot += x[i] * y[i];
        nx += x[i] * x[i];
        ny += y[i] * y[i];
    }
    if (nx == 0.0 || ny == 0.0)
        throw std::invalid_argument("cosine: zero vector");
    return dot / (std::sqrt(nx) * std::sqrt(ny));
}

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw std::invalid_argument("spearman: dimension mismatch");
    const int n = static_cast<int>(x.size());
    if (n < 2)
        throw std::invalid_argument("spearman: need at least 2 entries");
    const auto ox = ordering_of(x);
    const auto oy = ordering_of(y);
    double sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double d = ox.ranks[i] - oy.ranks[i];
        sum_sq += d * d;
    }
    return 1.0 - 6.0 * sum_sq / (static_cast<double>(n) * (static_cast<double>(n) * n - 1.0));
}

std::vector<double> total_volume(const Network& net) {
    if (net.mode() != NetworkMode::Trading)
        throw std::invalid_argument("total_volume: requires a trading-mode network");
    if (net.vertex_count() < 1)
        throw std::invalid_argument("total_volume: empty network");
    auto volume = degree_summary(net).total_degree;
    const double total = std::accumulate(volume.begin(), volume.end(), 0.0);
    if (total <= 0.0)
        throw std::invalid_argument("total_volume: network carries no volume");
    for (auto& v : volume)
        v /= total;
    return volume;
}

BenchmarkReport benchmark(const std::vector<std::pair<std::string, Network>>& datasets,
                          const RunConfig& cfg) {
    cfg.validate();
    BenchmarkReport report;
    for (const auto& [name, net] : datasets) {
        BenchmarkRow row;
        row.name = name;
        row.vertices = net.vertex_count();
        row.edges = static_cast<long>(net.adjacency().nonzeros());

        const auto classic = hits(net, cfg);
        row.hits_iterations = {classic.authority.iterations, classic.authority.converged};
        const auto pr = pagerank(net, cfg);
        row.pagerank_iterations = {pr.iterations, pr.converged};
        const auto accelerated = hits_accelerated(net, cfg);
        row.hits_accel_iterations = {accelerated.authority.iterations,
                                     accelerated.authority.converged};
        const auto trade = trade_rank(net, cfg);
        row.traderank_iterations = {trade.iterations, trade.converged};

        const auto standard = total_volume(net);
        row.cos_theta = cosine(trade.scores, standard);
        row.rank_correlation = spearman(trade.scores, standard);
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace {

std::string format_number(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

std::string format_cell(const IterationCell& c) {
    return std::to_string(c.iterations) + (c.converged ? "" : "*");
}

struct ColumnMeans {
    double vertices = 0.0, edges = 0.0, cos_theta = 0.0, rho = 0.0;
    double iters[4] = {0.0, 0.0, 0.0, 0.0};
    long iter_counts[4] = {0, 0, 0, 0};
};

} // namespace

void BenchmarkReport::write_csv(std::ostream& out, int significant_digits) const {
    out << "name,vertices,edges,it_hits,it_pagerank,it_hits_accel,it_traderank,"
           "cos_theta,spearman\n";
    ColumnMeans m;
    for (const auto& row : rows) {
        out << row.name << ',' << row.vertices << ',' << row.edges << ','
            << format_cell(row.hits_iterations) << ',' << format_cell(row.pagerank_iterations)
            << ',' << format_cell(row.hits_accel_iterations) << ','
            << format_cell(row.traderank_iterations) << ','
            << format_number(row.cos_theta, significant_digits) << ','
            << format_number(row.rank_correlation, significant_digits) << '\n';
        m.vertices += row.vertices;
        m.edges += static_cast<double>(row.edges);
        m.cos_theta += row.cos_theta;
        m.rho += row.rank_correlation;
        const IterationCell* cells[4] = {&row.hits_iterations, &row.pagerank_iterations,
                                         &row.hits_accel_iterations, &row.traderank_iterations};
        for (int c = 0; c < 4; ++c) {
            if (cells[c]->converged) {
                m.iters[c] += cells[c]->iterations;
                ++m.iter_counts[c];
            }
        }
    }
    if (rows.empty())
        return;
    const double n = static_cast<double>(rows.size());
    out << "average," << format_number(m.vertices / n, significant_digits) << ','
        << format_number(m.edges / n, significant_digits);
    for (int c = 0; c < 4; ++c) {
        out << ',';
        if (m.iter_counts[c] > 0)
            out << format_number(m.iters[c] / m.iter_counts[c], significant_digits);
    }
    out << ',' << format_number(m.cos_theta / n, significant_digits) << ','
        << format_number(m.rho / n, significant_digits) << '\n';
}

} // namespace linkrank
