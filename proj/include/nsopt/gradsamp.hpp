#pragma once

#include "nsopt/core.hpp"
#include "nsopt/rng.hpp"

#include <optional>
#include <vector>

namespace nsopt {

struct GsaOptions {
    std::vector<double> radii = {1e-4, 1e-5, 1e-6};  // strictly decreasing sample radii
    std::optional<int> samples_per_iter;             // unset selects 2n
    double gsa_normtol = 1e-6;
    int maxit_per_phase = 100;

    void validate(int n) const;
    int effective_samples(int n) const;
};

/// Gradient sampling: at each iterate, gradients are taken at the point and at
/// m random points in the epsilon-ball around it; the negated min-norm vector
/// of their convex hull is the search direction. The radius schedule shrinks
/// once the hull norm passes gsa_normtol (Optimal on the final radius).
/// Line-search failure mid-schedule shrinks the radius instead of aborting.
RunResult gsa_run(const Objective& obj, const Vector& x0, const SolverOptions& opts,
                  const GsaOptions& gopts, RandomStream& rng);

}  // namespace nsopt
