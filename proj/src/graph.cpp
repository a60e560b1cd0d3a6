#include "linkrank/graph.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace linkrank {

int Network::index_of(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

std::vector<EdgeRecord> Network::to_records() const {
    std::vector<EdgeRecord> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_)
        out.push_back({ids_[e.source], ids_[e.target], e.weight, e.resource});
    return out;
}

Network ingest_edge_list(std::span<const EdgeRecord> rows, NetworkMode mode) {
    return Network::build(nullptr, rows, mode);
}

Network make_network(const std::vector<std::string>& vertex_ids,
                     std::span<const EdgeRecord> rows, NetworkMode mode) {
    return Network::build(&vertex_ids, rows, mode);
}

Network Network::build(const std::vector<std::string>* declared_ids,
                       std::span<const EdgeRecord> rows, NetworkMode mode) {
    Network net;
    net.mode_ = mode;
    auto intern = [&net](const std::string& id) {
        auto [it, inserted] = net.index_.try_emplace(id, net.vertex_count());
        if (inserted)
            net.ids_.push_back(id);
        return it->second;
    };
    if (declared_ids != nullptr) {
        for (const auto& id : *declared_ids) {
            if (net.index_.contains(id))
                throw std::invalid_argument("duplicate vertex id '" + id + "'");
            intern(id);
        }
    }

    std::vector<SparseMatrix::Triplet> triplets;
    triplets.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (!(row.weight >= 0.0))
            throw std::invalid_argument("edge row " + std::to_string(r + 1) +
                                        ": negative weight " + std::to_string(row.weight));
        if (mode == NetworkMode::Www && row.weight != 1.0)
            throw std::invalid_argument("edge row " + std::to_string(r + 1) +
                                        ": www-mode weight must be 1, got " +
                                        std::to_string(row.weight));
        const int s = intern(row.source);
        const int t = intern(row.target);
        net.edges_.push_back({s, t, row.weight, row.resource});
        triplets.push_back({s, t, row.weight});
    }
    const int n = net.vertex_count();
    net.adjacency_ = SparseMatrix(n, n, std::move(triplets));
    return net;
}

std::map<std::string, Network> split_by_resource(std::span<const EdgeRecord> rows) {
    std::map<std::string, std::vector<EdgeRecord>> groups;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].resource.empty())
            throw std::invalid_argument("edge row " + std::to_string(r + 1) +
                                        ": missing resource label");
        groups[rows[r].resource].push_back(rows[r]);
    }
    std::map<std::string, Network> out;
    for (auto& [label, group] : groups)
        out.emplace(label, ingest_edge_list(group, NetworkMode::Trading));
    return out;
}

DegreeSummary degree_summary(const SparseMatrix& adjacency, bool weighted) {
    DegreeSummary d;
    d.in_degree = weighted ? adjacency.col_sums() : adjacency.col_counts();
    d.out_degree = weighted ? adjacency.row_sums() : adjacency.row_counts();
    d.total_degree.resize(d.in_degree.size());
    for (std::size_t i = 0; i < d.total_degree.size(); ++i)
        d.total_degree[i] = d.in_degree[i] + d.out_degree[i];
    return d;
}

DegreeSummary degree_summary(const Network& net) {
    return degree_summary(net.adjacency(), net.mode() == NetworkMode::Trading);
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    char delim = 0;
    if (line.find('\t') != std::string::npos)
        delim = '\t';
    else if (line.find(',') != std::string::npos)
        delim = ',';

    std::vector<std::string> fields;
    if (delim != 0) {
        std::string field;
        std::istringstream ss(line);
        while (std::getline(ss, field, delim)) {
            const auto b = field.find_first_not_of(" \t\r");
            const auto e = field.find_last_not_of(" \t\r");
            fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
        }
    } else {
        std::istringstream ss(line);
        std::string field;
        while (ss >> field)
            fields.push_back(field);
    }
    return fields;
}

} // namespace

std::vector<EdgeRecord> parse_edge_list(std::istream& in) {
    std::vector<EdgeRecord> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;
        auto fields = split_fields(line);
        if (fields.size() < 2 || fields.size() > 4)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected 2-4 fields, got " +
                                        std::to_string(fields.size()));
        EdgeRecord rec;
        rec.source = fields[0];
        rec.target = fields[1];
        if (fields.size() >= 3 && !fields[2].empty()) {
            try {
                std::size_t pos = 0;
                rec.weight = std::stod(fields[2], &pos);
                if (pos != fields[2].size())
                    throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": bad weight '" + fields[2] + "'");
            }
        }
        if (fields.size() == 4)
            rec.resource = fields[3];
        rows.push_back(std::move(rec));
    }
    return rows;
}

std::vector<EdgeRecord> read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open edge list: " + path);
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Network& net) {
    char buf[64];
    for (const auto& e : net.edges()) {
        std::snprintf(buf, sizeof(buf), "%.17g", e.weight);
        out << net.id_of(e.source) << '\t' << net.id_of(e.target) << '\t' << buf;
        if (!e.resource.empty())
            out << '\t' << e.resource;
        out << '\n';
    }
}

} // namespace linkrank
