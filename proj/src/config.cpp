#include "linkrank/config.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace linkrank {

namespace {

void require_open_unit(double v, const char* name) {
    if (!(v > 0.0) || !(v < 1.0))
        throw std::invalid_argument(std::string(name) + " must lie strictly in (0,1), got " +
                                    std::to_string(v));
}

} // namespace

void RunConfig::validate() const {
    require_open_unit(alpha, "alpha");
    require_open_unit(beta, "beta");
    require_open_unit(zeta, "zeta");
    require_open_unit(blend_c, "blend_c");
    if (!(tolerance > 0.0) || !std::isfinite(tolerance))
        throw std::invalid_argument("tolerance must be a positive finite real");
    if (max_iterations <= 0)
        throw std::invalid_argument("max_iterations must be positive");
}

} // namespace linkrank
