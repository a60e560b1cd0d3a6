#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "linkrank/graph.hpp"

namespace linkrank {

enum class DegreeDirection { In, Out, Total };

/// Degree histogram with a log-log least-squares power-law fit and a
/// Poisson fit of the same sample, both over unweighted degree counts.
///
/// The power-law fit runs on (log k, log p_k) for k in
/// [fit_k_min, fit_k_max], keeping only degrees whose histogram count
/// reaches fit_min_count (single-count tail buckets otherwise flatten the
/// slope). gamma_defined is false when fewer than two fit points survive,
/// e.g. for regular graphs. Log-likelihoods compare both models truncated
/// and renormalized on the common support 1..max observed degree.
struct DegreeProfile {
    std::map<int, int> histogram;        ///< degree -> vertex count; totals N
    std::map<int, double> frequencies;   ///< p_k over observed degrees
    double mean_degree = 0.0;
    double poisson_mean = 0.0;           ///< equals mean_degree

    bool gamma_defined = false;
    double gamma = 0.0;
    int fit_k_min = 0;
    int fit_k_max = 0;
    int fit_points = 0;
    int fit_min_count = 0;

    double poisson_loglik = 0.0;
    double powerlaw_loglik = 0.0;
};

DegreeProfile degree_profile(const Network& net, DegreeDirection direction,
                             int k_min = 2, int min_count = 5);

/// The same growing graph captured at increasing vertex counts; vertex
/// sets are nested (indices are stable across snapshots).
struct GrowthHistory {
    std::vector<Network> snapshots;
    const Network& final_network() const { return snapshots.back(); }
};

enum class AttachmentRule { Preferential, Uniform };

struct GrowthOptions {
    AttachmentRule attachment = AttachmentRule::Preferential;
    bool symmetrize = false;
    /// Vertex counts at which to record snapshots; the final count is
    /// always recorded. Empty selects quartiles n/4, n/2, 3n/4, n.
    std::vector<int> snapshot_sizes;
};

/// Growing attachment graph: seed clique on m_edges vertices (one directed
/// edge newer->older per pair), then each new vertex attaches m_edges
/// distinct edges to existing vertices. Preferential picks targets with
/// probability proportional to current total degree, Uniform picks them
/// uniformly. Edges point new->old unless symmetrize adds the reverse
/// direction too. Deterministic per seed.
GrowthHistory generate_growth(int n, int m_edges, std::uint64_t seed,
                              const GrowthOptions& options = {});

/// Preferential-attachment growth with default options.
GrowthHistory generate_ba(int n, int m_edges, std::uint64_t seed);

/// Directed random graph: every ordered pair is an edge independently with
/// probability edge_prob. Deterministic per seed.
Network generate_er(int n, double edge_prob, std::uint64_t seed);

/// Crawl-shaped directed graph with heavy-tailed in- AND out-degrees:
/// repeated edge events where a new vertex (probability 2/avg_degree)
/// attaches one edge, or an edge is added between existing vertices, with
/// endpoints chosen preferentially by out-/in-degree. Duplicate edges are
/// skipped, so the realized average degree lands slightly below the target.
Network generate_webgraph(int n, double avg_degree, std::uint64_t seed);

/// Attachment-strength fit: the exponent plus the per-bin (mean degree,
/// mean degree change) pairs behind it, ready for plotting.
struct AttachmentFit {
    double exponent = 0.0;
    std::vector<std::pair<double, double>> bin_means;
};

/// Attachment-strength exponent from a growth history: pools (degree,
/// degree change) pairs over consecutive snapshots, averages the change in
/// half-octave degree bins and fits the log-log slope. Near 1 for
/// preferential attachment, near 0 for uniform attachment. Throws when
/// fewer than 5 bins carry data.
AttachmentFit pa_exponent_fit(const GrowthHistory& history);
double pa_exponent(const GrowthHistory& history);

} // namespace linkrank
