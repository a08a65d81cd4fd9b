#pragma once

#include "nsopt/core.hpp"

#include <deque>

namespace nsopt {

/// Gradients evaluated near the current iterate. Entries farther than
/// evaldist from the iterate are evicted before each stopping test; size is
/// bounded by the cap (oldest entries dropped first).
class GradientBundle {
  public:
    struct Entry {
        Vector point;
        Vector grad;
    };

    explicit GradientBundle(int cap) : cap_(cap) {}

    void refresh(const Vector& x_now, const Vector& g_now, double evaldist);
    std::vector<Vector> gradients() const;
    std::size_t size() const { return entries_.size(); }
    int cap() const { return cap_; }

  private:
    std::deque<Entry> entries_;
    int cap_;
};

/// Full-memory BFGS with a weak Wolfe line search and the nearby-gradient
/// bundle stopping test: terminate Optimal when the min-norm vector of the
/// convex hull of bundle gradients has norm <= normtol.
RunResult bfgs_run(const Objective& obj, const Vector& x0, const SolverOptions& opts);

}  // namespace nsopt
