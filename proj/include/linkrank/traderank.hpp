#pragma once

#include <vector>

#include "linkrank/config.hpp"
#include "linkrank/graph.hpp"
#include "linkrank/spectral.hpp"

namespace linkrank {

/// Per-vertex constants encoding the trading-network attachment rule.
///
/// For vertex i with in-degree di and out-degree do (total d):
///   imbalance_sign  = sign(di - do)                      in {-1, 0, +1}
///   imbalance_scale = |di - do| ^ imbalance_sign         with 0^0 := 1
///   authority_weight = (di / d) * imbalance_scale
///   hub_weight       = (do / d) / imbalance_scale
/// Isolated vertices (d = 0) get both weights 0. The scale stays positive,
/// which keeps the diagonal matrices invertible. Non-integer degrees can
/// push |di - do| into (0,1), making the scale exceed 1 on the negative
/// branch; the formulas are applied as written, no clamping.
struct AttachmentWeights {
    std::vector<double> authority_weight;  ///< favours inlink-rich vertices
    std::vector<double> hub_weight;        ///< favours outlink-rich vertices
    std::vector<int> imbalance_sign;
    std::vector<double> imbalance_scale;
};

AttachmentWeights attachment_weights(const DegreeSummary& deg);

/// Reserved-resource amounts to blend into a converged ranking.
struct BlendInput {
    std::vector<double> reserved;  ///< one nonnegative amount per vertex
    double blend_c = 0.5;          ///< ranking weight, in (0,1)
};

/// Trading-network ranking: the dominant vector of
///   beta * diag(authority_weight) * L  +  (1-beta) * diag(hub_weight) * L^T
/// after the stochasticity and positivity adjustments. Requires a
/// trading-mode network (degrees are volumes); cfg.weighted_degrees
/// switches the constants to transaction counts.
RankResult trade_rank(const Network& net, const RunConfig& cfg);

struct BuyerSellerResult {
    RankResult buyer;
    RankResult seller;
};

/// Separate rankings of agents as resource receivers (buyer) and providers
/// (seller): independent iterations on diag(authority_weight)*L and
/// diag(hub_weight)*L^T, each stochasticized and smoothed like trade_rank.
BuyerSellerResult buyer_seller(const Network& net, const RunConfig& cfg);

/// blend.blend_c * rank + (1 - blend_c) * normalized reserved amounts.
/// Requires a converged rank, matching dimensions and a nonzero reserved
/// vector; the output sums to 1.
RankResult blend_reserved(const RankResult& rank, const BlendInput& blend);

} // namespace linkrank
