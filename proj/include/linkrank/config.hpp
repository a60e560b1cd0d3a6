#pragma once

#include <cstdint>

namespace linkrank {

/// Tunables shared by every ranking run. All open-interval bounds are
/// enforced strictly; construct, adjust, then call validate() before use
/// (the ranking entry points call it for you).
struct RunConfig {
    double alpha = 0.85;      ///< PageRank teleport mix, in (0,1)
    double beta = 0.5;        ///< trade ranking inlink/outlink balance, in (0,1)
    double zeta = 0.99;       ///< positivity smoothing weight, in (0,1), near 1
    double blend_c = 0.5;     ///< reserved-resource blend weight, in (0,1)
    double tolerance = 1e-8;  ///< residual threshold, > 0
    int max_iterations = 10000;
    std::uint64_t rng_seed = 0;
    /// Trading-network degrees as summed volumes (true) or transaction
    /// counts (false). Only affects the trade ranking constants.
    bool weighted_degrees = true;

    void validate() const;
};

} // namespace linkrank
