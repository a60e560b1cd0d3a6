#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "linkrank/sparse.hpp"

namespace linkrank {

/// Interpretation of edge weights: hyperlink graphs carry 0/1 weights,
/// trading graphs carry transaction prices.
enum class NetworkMode { Www, Trading };

/// One raw input row before index assignment. A missing weight field
/// defaults to 1; an empty resource string means "unlabeled".
struct EdgeRecord {
    std::string source;
    std::string target;
    double weight = 1.0;
    std::string resource;
};

/// Weighted in/out/total degree vectors of one adjacency matrix.
struct DegreeSummary {
    std::vector<double> in_degree;   ///< column sums
    std::vector<double> out_degree;  ///< row sums
    std::vector<double> total_degree;
};

/// Immutable snapshot of a labeled, weighted directed network.
///
/// External string ids map to dense indices in first-appearance order,
/// which makes every downstream computation deterministic for a fixed
/// input file. Parallel edges accumulate into one adjacency entry.
/// Self-loops are kept in storage and in adjacency(), but the ranking
/// algorithms operate on ranking_adjacency(), which drops them.
class Network {
public:
    struct Edge {
        int source = 0;
        int target = 0;
        double weight = 0.0;
        std::string resource;
    };

    Network() = default;

    int vertex_count() const { return static_cast<int>(ids_.size()); }
    NetworkMode mode() const { return mode_; }
    const std::vector<std::string>& vertex_ids() const { return ids_; }
    const std::string& id_of(int index) const { return ids_.at(index); }
    /// Dense index of an external id, or -1 when absent.
    int index_of(const std::string& id) const;
    const std::vector<Edge>& edges() const { return edges_; }
    const SparseMatrix& adjacency() const { return adjacency_; }
    SparseMatrix ranking_adjacency() const { return adjacency_.without_diagonal(); }

    std::vector<EdgeRecord> to_records() const;

private:
    friend Network ingest_edge_list(std::span<const EdgeRecord>, NetworkMode);
    friend Network make_network(const std::vector<std::string>&, std::span<const EdgeRecord>,
                                NetworkMode);

    static Network build(const std::vector<std::string>* declared_ids,
                         std::span<const EdgeRecord> rows, NetworkMode mode);

    std::vector<std::string> ids_;
    std::unordered_map<std::string, int> index_;
    std::vector<Edge> edges_;
    SparseMatrix adjacency_;
    NetworkMode mode_ = NetworkMode::Trading;
};

/// Builds a Network from raw rows. Rejects negative weights and, in Www
/// mode, any weight other than 1; diagnostics name the 1-based row.
Network ingest_edge_list(std::span<const EdgeRecord> rows, NetworkMode mode);

/// Like ingest_edge_list but with vertices pre-registered in the given
/// order, so isolated vertices are representable. Rows may still mention
/// new ids; those are appended after the declared ones.
Network make_network(const std::vector<std::string>& vertex_ids,
                     std::span<const EdgeRecord> rows, NetworkMode mode);

/// One trading network per distinct resource label. Every row must carry a
/// label; vertex sets cover only the vertices seen in that resource's rows.
std::map<std::string, Network> split_by_resource(std::span<const EdgeRecord> rows);

/// Weighted (sums) or unweighted (entry counts) degree vectors.
DegreeSummary degree_summary(const SparseMatrix& adjacency, bool weighted = true);
DegreeSummary degree_summary(const Network& net);

/// Edge-list text format: one record per line, fields
/// `source, target, weight[, resource]` separated by tabs, commas or
/// whitespace; `#`-prefixed lines are comments.
std::vector<EdgeRecord> parse_edge_list(std::istream& in);
std::vector<EdgeRecord> read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Network& net);

} // namespace linkrank
