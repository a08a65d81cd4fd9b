#pragma once

#include "nsopt/core.hpp"

#include <vector>

namespace nsopt {

/// Smallest-norm point of the convex hull of a finite gradient set.
struct HullSolution {
    Vector g_star;  // reconstructed exactly as the lambda-weighted sum of inputs
    Vector lambda;  // simplex weights over the inputs
    double norm = 0.0;
};

/// Solves min ||sum_i lambda_i g_i|| over the unit simplex. Uses the
/// min-norm-point active-set scheme on the Gram matrix; degenerate instances
/// fall back to projected gradient on the simplex (tolerance 1e-10 relative).
///
/// Guarantees on return:
///   lambda >= 0, sum lambda = 1 (within 1e-10)
///   g_star == sum lambda_i g_i as computed from the returned weights
///   g_i . g_star >= ||g_star||^2 - 1e-8 (1 + ||g_star||^2) for every input
HullSolution min_norm_in_hull(const std::vector<Vector>& gradients);

}  // namespace nsopt
