#include "linkrank/traderank.hpp"

#include <cmath>
#include <stdexcept>

namespace linkrank {

AttachmentWeights attachment_weights(const DegreeSummary& deg) {
    const std::size_t n = deg.in_degree.size();
    AttachmentWeights w;
    w.authority_weight.resize(n);
    w.hub_weight.resize(n);
    w.imbalance_sign.resize(n);
    w.imbalance_scale.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double in = deg.in_degree[i];
        const double out = deg.out_degree[i];
        const double total = deg.total_degree[i];
        const int sign = in > out ? 1 : (in < out ? -1 : 0);
        const double gap = std::abs(in - out);
        const double scale = sign == 0 ? 1.0 : (sign > 0 ? gap : 1.0 / gap);
        w.imbalance_sign[i] = sign;
        w.imbalance_scale[i] = scale;
        if (total > 0.0) {
            w.authority_weight[i] = in / total * scale;
            w.hub_weight[i] = out / total / scale;
        } else {
            w.authority_weight[i] = 0.0;
            w.hub_weight[i] = 0.0;
        }
    }
    return w;
}

namespace {

SparseMatrix trade_operator_matrix(const SparseMatrix& adj, const AttachmentWeights& w,
                                   double beta) {
    const SparseMatrix authority_part = adj.scaled_rows(w.authority_weight);
    const SparseMatrix hub_part = adj.transposed().scaled_rows(w.hub_weight);
    return SparseMatrix::weighted_sum(authority_part, hub_part, beta, 1.0 - beta);
}

void require_trading(const Network& net, const char* what) {
    if (net.mode() != NetworkMode::Trading)
        throw std::invalid_argument(std::string(what) +
                                    ": requires a trading-mode network (degrees must be volumes)");
}

} // namespace

RankResult trade_rank(const Network& net, const RunConfig& cfg) {
    cfg.validate();
    require_trading(net, "trade_rank");
    if (net.vertex_count() < 1)
        throw std::invalid_argument("trade_rank: empty network");
    const SparseMatrix adj = net.ranking_adjacency();
    const auto weights = attachment_weights(degree_summary(adj, cfg.weighted_degrees));
    const SparseMatrix combined = trade_operator_matrix(adj, weights, cfg.beta);
    return power_iterate(smooth(stochasticize(combined), cfg.zeta), cfg);
}

BuyerSellerResult buyer_seller(const Network& net, const RunConfig& cfg) {
    cfg.validate();
    require_trading(net, "buyer_seller");
    if (net.vertex_count() < 1)
        throw std::invalid_argument("buyer_seller: empty network");
    const SparseMatrix adj = net.ranking_adjacency();
    const auto weights = attachment_weights(degree_summary(adj, cfg.weighted_degrees));
    BuyerSellerResult result;
    result.buyer =
        power_iterate(smooth(stochasticize(adj.scaled_rows(weights.authority_weight)), cfg.zeta), cfg);
    result.seller = power_iterate(
        smooth(stochasticize(adj.transposed().scaled_rows(weights.hub_weight)), cfg.zeta), cfg);
    return result;
}

RankResult blend_reserved(const RankResult& rank, const BlendInput& blend) {
    if (!(blend.blend_c > 0.0) || !(blend.blend_c < 1.0))
        throw std::invalid_argument("blend_reserved: blend_c must lie strictly in (0,1)");
    if (!rank.converged)
        throw std::invalid_argument("blend_reserved: ranking did not converge");
    if (blend.reserved.size() != rank.scores.size())
        throw std::invalid_argument("blend_reserved: reserved vector has dimension " +
                                    std::to_string(blend.reserved.size()) + ", expected " +
                                    std::to_string(rank.scores.size()));
    double total = 0.0;
    for (double v : blend.reserved) {
        if (!(v >= 0.0))
            throw std::invalid_argument("blend_reserved: reserved amounts must be nonnegative");
        total += v;
    }
    if (total <= 0.0)
        throw std::invalid_argument("blend_reserved: reserved vector is all zero");

    RankResult out = rank;
    const double c = blend.blend_c;
    for (std::size_t i = 0; i < out.scores.size(); ++i)
        out.scores[i] = c * rank.scores[i] + (1.0 - c) * blend.reserved[i] / total;
    return out;
}

} // namespace linkrank
