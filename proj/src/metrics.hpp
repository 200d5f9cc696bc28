#pragma once

#include <algorithm>

#include "errors.hpp"

namespace lowd {

// (rho* - rho)/rho*, clamped at 0 so roundoff past the optimum reads as exact.
inline double relative_error(double rho_star, double rho) {
    if (!(rho_star > 0.0)) throw ValidationError("reference density must be positive");
    return std::max(0.0, (rho_star - rho) / rho_star);
}

// Distance of the current sum of squared loads from the optimum, clamped at 0.
inline double qp_error(double current, double optimum) {
    return std::max(0.0, current - optimum);
}

}  // namespace lowd
