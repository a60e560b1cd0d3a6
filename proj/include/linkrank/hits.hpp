#pragma once

#include <span>

#include "linkrank/config.hpp"
#include "linkrank/graph.hpp"
#include "linkrank/spectral.hpp"

namespace linkrank {

/// Authority and hub chains of one HITS-family run. Each chain carries its
/// own iteration count; benchmark tables report the authority chain.
struct HitsResult {
    RankResult authority;
    RankResult hub;
};

/// Classic HITS: dominant eigenvectors of the smoothed L^T L (authority)
/// and L L^T (hub) operators, each under per-step 1-norm normalization.
HitsResult hits(const Network& net, const RunConfig& cfg);

/// HITS with the trading-network attachment weights folded in:
///   a <- h * diag(hub_weight) * L,   h <- a * diag(authority_weight) * L^T
/// so the combined authority operator is
///   diag(authority_weight) L^T diag(hub_weight) L
/// smoothed with the same zeta mixing as the classic variant. The weights
/// use unweighted degree counts. On link graphs whose degree structure
/// follows preferential attachment this converges in fewer iterations.
HitsResult hits_accelerated(const Network& net, const RunConfig& cfg);

/// Shared alternation core: classic HITS is the unit-weight special case.
/// Exposed so the equivalence is testable.
HitsResult hits_with_weights(const SparseMatrix& adjacency,
                             std::span<const double> authority_weight,
                             std::span<const double> hub_weight, const RunConfig& cfg);

} // namespace linkrank
