#pragma once

#include "linkrank/config.hpp"
#include "linkrank/graph.hpp"
#include "linkrank/spectral.hpp"

namespace linkrank {

/// Stationary vector of the damped random-surfer operator built from the
/// network's ranking adjacency: rows normalized by out-degree, dangling
/// rows replaced by the uniform row, then mixed with the uniform matrix by
/// cfg.alpha. Scores are positive and sum to 1.
RankResult pagerank(const Network& net, const RunConfig& cfg);

} // namespace linkrank
