#include "linkrank/hits.hpp"

#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linkrank/traderank.hpp"

namespace linkrank {

namespace {

// x -> zeta * ((x . pre) * First * post) * Second + (1-zeta)/n * sum(x),
// with . denoting entrywise products. Covers both chains: the authority
// chain uses (pre=authority_weight, First=L^T, post=hub_weight, Second=L),
// the hub chain the mirrored arrangement.
LinearOperator chain_operator(std::shared_ptr<const SparseMatrix> first,
                              std::shared_ptr<const SparseMatrix> second,
                              std::vector<double> pre, std::vector<double> post, double zeta) {
    return [first = std::move(first), second = std::move(second), pre = std::move(pre),
            post = std::move(post), zeta,
            scratch_a = std::vector<double>(), scratch_b = std::vector<double>()](
               std::span<const double> x, std::span<double> y) mutable {
        const int n = static_cast<int>(x.size());
        scratch_a.resize(n);
        scratch_b.resize(n);
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            scratch_a[i] = x[i] * pre[i];
            total += x[i];
        }
        first->apply_left(scratch_a, scratch_b);
        for (int i = 0; i < n; ++i)
            scratch_b[i] *= post[i];
        second->apply_left(scratch_b, y);
        const double uniform_share = (1.0 - zeta) * total / n;
        for (int i = 0; i < n; ++i)
            y[i] = zeta * y[i] + uniform_share;
    };
}

} // namespace

HitsResult hits_with_weights(const SparseMatrix& adjacency,
                             std::span<const double> authority_weight,
                             std::span<const double> hub_weight, const RunConfig& cfg) {
    cfg.validate();
    const int n = adjacency.rows();
    if (n < 1)
        throw std::invalid_argument("hits: empty network");
    if (static_cast<int>(authority_weight.size()) != n ||
        static_cast<int>(hub_weight.size()) != n)
        throw std::invalid_argument("hits: weight vectors must match the vertex count");

    auto forward = std::make_shared<const SparseMatrix>(adjacency);
    auto backward = std::make_shared<const SparseMatrix>(adjacency.transposed());
    const std::vector<double> ca(authority_weight.begin(), authority_weight.end());
    const std::vector<double> ch(hub_weight.begin(), hub_weight.end());

    HitsResult result;
    result.authority = power_iterate(chain_operator(backward, forward, ca, ch, cfg.zeta),
                                     uniform_vector(n), cfg.tolerance, cfg.max_iterations);
    result.hub = power_iterate(chain_operator(forward, backward, ch, ca, cfg.zeta),
                               uniform_vector(n), cfg.tolerance, cfg.max_iterations);
    return result;
}

HitsResult hits(const Network& net, const RunConfig& cfg) {
    const SparseMatrix adj = net.ranking_adjacency();
    const std::vector<double> unit(adj.rows(), 1.0);
    return hits_with_weights(adj, unit, unit, cfg);
}

HitsResult hits_accelerated(const Network& net, const RunConfig& cfg) {
    const SparseMatrix adj = net.ranking_adjacency();
    const auto weights = attachment_weights(degree_summary(adj, /*weighted=*/false));
    return hits_with_weights(adj, weights.authority_weight, weights.hub_weight, cfg);
}

} // namespace linkrank
