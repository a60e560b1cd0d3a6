#include "linkrank/netanalysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "linkrank/rng.hpp"

namespace linkrank {

namespace {

std::vector<int> unweighted_degrees(const Network& net, DegreeDirection direction) {
    const auto& adj = net.adjacency();
    const auto in = adj.col_counts();
    const auto out = adj.row_counts();
    std::vector<int> d(net.vertex_count(), 0);
    for (int i = 0; i < net.vertex_count(); ++i) {
        switch (direction) {
        case DegreeDirection::In: d[i] = static_cast<int>(in[i]); break;
        case DegreeDirection::Out: d[i] = static_cast<int>(out[i]); break;
        case DegreeDirection::Total: d[i] = static_cast<int>(in[i] + out[i]); break;
        }
    }
    return d;
}

struct FitLine {
    double slope = 0.0;
    double intercept = 0.0;
};

FitLine least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    FitLine f;
    f.slope = (n * sxy - sx * sy) / denom;
    f.intercept = (sy - f.slope * sx) / n;
    return f;
}

} // namespace

DegreeProfile degree_profile(const Network& net, DegreeDirection direction, int k_min,
                             int min_count) {
    if (net.vertex_count() < 2)
        throw std::invalid_argument("degree_profile: need at least 2 vertices");
    if (k_min < 1)
        throw std::invalid_argument("degree_profile: k_min must be >= 1");
    const auto degrees = unweighted_degrees(net, direction);
    const int n = net.vertex_count();

    DegreeProfile p;
    for (int d : degrees)
        ++p.histogram[d];
    double mean = 0.0;
    for (const auto& [k, c] : p.histogram) {
        p.frequencies[k] = static_cast<double>(c) / n;
        mean += static_cast<double>(k) * c;
    }
    p.mean_degree = mean / n;
    p.poisson_mean = p.mean_degree;
    p.fit_min_count = min_count;

    std::vector<double> xs, ys;
    int lo = 0, hi = 0;
    for (const auto& [k, c] : p.histogram) {
        if (k >= k_min && c >= min_count) {
            xs.push_back(std::log(static_cast<double>(k)));
            ys.push_back(std::log(p.frequencies[k]));
            if (lo == 0)
                lo = k;
            hi = k;
        }
    }
    p.fit_points = static_cast<int>(xs.size());
    p.fit_k_min = lo;
    p.fit_k_max = hi;
    if (p.fit_points >= 2) {
        p.gamma = -least_squares(xs, ys).slope;
        p.gamma_defined = true;
    }

    // Model comparison on the common observed support [min positive degree,
    // max degree]; zero-degree vertices are excluded (the power law has no
    // mass at 0) and both models are renormalized on that support.
    const int kmax = p.histogram.rbegin()->first;
    int kmin_support = 0;
    for (const auto& [k, c] : p.histogram)
        if (k >= 1) {
            kmin_support = k;
            break;
        }
    if (kmax >= 1 && p.mean_degree > 0.0) {
        std::vector<double> log_pois(kmax + 1, 0.0), log_pl(kmax + 1, 0.0);
        double z_pois = 0.0, z_pl = 0.0;
        for (int k = kmin_support; k <= kmax; ++k) {
            log_pois[k] = k * std::log(p.mean_degree) - p.mean_degree - std::lgamma(k + 1.0);
            z_pois += std::exp(log_pois[k]);
            if (p.gamma_defined) {
                log_pl[k] = -p.gamma * std::log(static_cast<double>(k));
                z_pl += std::exp(log_pl[k]);
            }
        }
        double ll_pois = 0.0, ll_pl = 0.0;
        long positives = 0;
        for (const auto& [k, c] : p.histogram) {
            if (k < 1)
                continue;
            positives += c;
            ll_pois += c * log_pois[k];
            if (p.gamma_defined)
                ll_pl += c * log_pl[k];
        }
        p.poisson_loglik = ll_pois - positives * std::log(z_pois);
        p.powerlaw_loglik = p.gamma_defined
                                ? ll_pl - positives * std::log(z_pl)
                                : std::numeric_limits<double>::quiet_NaN();
    } else {
        p.poisson_loglik = std::numeric_limits<double>::quiet_NaN();
        p.powerlaw_loglik = std::numeric_limits<double>::quiet_NaN();
    }
    return p;
}

namespace {

std::vector<std::string> index_ids(int n) {
    std::vector<std::string> ids;
    ids.reserve(n);
    for (int i = 0; i < n; ++i)
        ids.push_back(std::to_string(i));
    return ids;
}

} // namespace

GrowthHistory generate_growth(int n, int m_edges, std::uint64_t seed,
                              const GrowthOptions& options) {
    if (m_edges < 1 || n <= m_edges)
        throw std::invalid_argument("generate_growth: need n > m_edges >= 1");

    std::vector<int> sizes = options.snapshot_sizes;
    if (sizes.empty())
        sizes = {n / 4, n / 2, 3 * n / 4, n};
    for (int& s : sizes)
        s = std::clamp(s, std::max(m_edges, 1), n);
    sizes.push_back(n);
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> endpoints;
    auto add_edge = [&](int from, int to) {
        arcs.emplace_back(from, to);
        if (options.symmetrize)
            arcs.emplace_back(to, from);
        endpoints.push_back(from);
        endpoints.push_back(to);
    };

    // seed clique: one directed edge newer -> older per pair
    for (int j = 1; j < m_edges; ++j)
        for (int i = 0; i < j; ++i)
            add_edge(j, i);

    std::vector<std::pair<int, std::size_t>> marks;  // (vertex count, arc count)
    std::size_t cursor = 0;
    auto record_if_due = [&](int vertex_count) {
        while (cursor < sizes.size() && sizes[cursor] <= vertex_count) {
            marks.emplace_back(sizes[cursor], arcs.size());
            ++cursor;
        }
    };
    record_if_due(m_edges);

    for (int v = m_edges; v < n; ++v) {
        std::set<int> targets;
        while (static_cast<int>(targets.size()) < m_edges) {
            int t;
            if (options.attachment == AttachmentRule::Uniform || endpoints.empty())
                t = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
            else
                t = endpoints[rng.below(endpoints.size())];
            targets.insert(t);
        }
        for (int t : targets)
            add_edge(v, t);
        record_if_due(v + 1);
    }

    const auto ids = index_ids(n);
    GrowthHistory history;
    for (const auto& [vertex_count, arc_count] : marks) {
        std::vector<EdgeRecord> records;
        records.reserve(arc_count);
        for (std::size_t e = 0; e < arc_count; ++e)
            records.push_back({ids[arcs[e].first], ids[arcs[e].second], 1.0, ""});
        history.snapshots.push_back(make_network(
            std::vector<std::string>(ids.begin(), ids.begin() + vertex_count), records,
            NetworkMode::Www));
    }
    return history;
}

GrowthHistory generate_ba(int n, int m_edges, std::uint64_t seed) {
    return generate_growth(n, m_edges, seed, {});
}

Network generate_er(int n, double edge_prob, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("generate_er: n must be positive");
    if (!(edge_prob > 0.0) || !(edge_prob < 1.0))
        throw std::invalid_argument("generate_er: edge_prob must lie strictly in (0,1)");
    SplitMix64 rng(seed);
    const auto ids = index_ids(n);
    std::vector<EdgeRecord> records;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (rng.unit() < edge_prob)
                records.push_back({ids[i], ids[j], 1.0, ""});
        }
    return make_network(ids, records, NetworkMode::Www);
}

Network generate_webgraph(int n, double avg_degree, std::uint64_t seed) {
    if (n < 3)
        throw std::invalid_argument("generate_webgraph: n must be at least 3");
    if (!(avg_degree > 0.0))
        throw std::invalid_argument("generate_webgraph: avg_degree must be positive");
    const double new_vertex_prob = std::min(1.0, 2.0 / avg_degree);
    constexpr double kUniformFallback = 0.1;

    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> arcs = {{0, 1}, {1, 2}, {2, 0}};
    std::vector<int> in_endpoints = {1, 2, 0};
    std::vector<int> out_endpoints = {0, 1, 2};
    std::unordered_set<std::uint64_t> seen;
    auto key = [n](int s, int t) {
        return static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(n) + t;
    };
    for (const auto& [s, t] : arcs)
        seen.insert(key(s, t));
    int nv = 3;

    auto pick_target = [&](int bound) {
        if (rng.unit() < kUniformFallback)
            return static_cast<int>(rng.below(static_cast<std::uint64_t>(bound)));
        return in_endpoints[rng.below(in_endpoints.size())];
    };
    auto pick_source = [&](int bound) {
        if (rng.unit() < kUniformFallback)
            return static_cast<int>(rng.below(static_cast<std::uint64_t>(bound)));
        return out_endpoints[rng.below(out_endpoints.size())];
    };
    auto add_edge = [&](int s, int t) {
        arcs.emplace_back(s, t);
        out_endpoints.push_back(s);
        in_endpoints.push_back(t);
        seen.insert(key(s, t));
    };

    while (nv < n) {
        if (rng.unit() < new_vertex_prob) {
            const int v = nv++;
            if (rng.unit() < 0.5)
                add_edge(v, pick_target(v));
            else
                add_edge(pick_source(v), v);
        } else {
            const int s = pick_source(nv);
            const int t = pick_target(nv);
            if (s != t && !seen.contains(key(s, t)))
                add_edge(s, t);
        }
    }

    const auto ids = index_ids(n);
    std::vector<EdgeRecord> records;
    records.reserve(arcs.size());
    for (const auto& [s, t] : arcs)
        records.push_back({ids[s], ids[t], 1.0, ""});
    return make_network(ids, records, NetworkMode::Www);
}

AttachmentFit pa_exponent_fit(const GrowthHistory& history) {
    if (history.snapshots.size() < 2)
        throw std::invalid_argument("pa_exponent: need at least 2 snapshots");

    std::map<int, std::pair<double, long>> k_bins;     // bin -> (sum k, count)
    std::map<int, std::pair<double, long>> dk_bins;    // bin -> (sum dk, count)
    for (std::size_t s = 0; s + 1 < history.snapshots.size(); ++s) {
        const Network& before = history.snapshots[s];
        const Network& after = history.snapshots[s + 1];
        const auto deg_before = unweighted_degrees(before, DegreeDirection::Total);
        const auto deg_after = unweighted_degrees(after, DegreeDirection::Total);
        for (int i = 0; i < before.vertex_count(); ++i) {
            const int k = deg_before[i];
            if (k < 1)
                continue;
            const int j = after.index_of(before.id_of(i));
            if (j < 0)
                throw std::invalid_argument("pa_exponent: snapshots are not nested");
            const double dk = deg_after[j] - k;
            const int bin = static_cast<int>(std::floor(2.0 * std::log2(k)));
            auto& kb = k_bins[bin];
            kb.first += k;
            kb.second += 1;
            auto& db = dk_bins[bin];
            db.first += dk;
            db.second += 1;
        }
    }

    AttachmentFit fit;
    std::vector<double> xs, ys;
    for (const auto& [bin, kb] : k_bins) {
        const auto& db = dk_bins[bin];
        const double mean_k = kb.first / kb.second;
        const double mean_dk = db.first / db.second;
        if (mean_dk > 0.0) {
            fit.bin_means.emplace_back(mean_k, mean_dk);
            xs.push_back(std::log(mean_k));
            ys.push_back(std::log(mean_dk));
        }
    }
    if (xs.size() < 5)
        throw std::runtime_error("pa_exponent: only " + std::to_string(xs.size()) +
                                 " nonempty degree bins, need at least 5");
    fit.exponent = least_squares(xs, ys).slope;
    return fit;
}

double pa_exponent(const GrowthHistory& history) { return pa_exponent_fit(history).exponent; }

} // namespace linkrank
