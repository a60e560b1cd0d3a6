#include "linkrank/pagerank.hpp"

#include <stdexcept>

namespace linkrank {

RankResult pagerank(const Network& net, const RunConfig& cfg) {
    cfg.validate();
    if (net.vertex_count() < 1)
        throw std::invalid_argument("pagerank: empty network");
    auto op = smooth(stochasticize(net.ranking_adjacency()), cfg.alpha);
    return power_iterate(op, cfg);
}

} // namespace linkrank
