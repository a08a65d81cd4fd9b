#pragma once

#include "nsopt/core.hpp"

namespace nsopt {

enum class LineSearchStatus { Success, FailBracket, FailBisect };

const char* to_string(LineSearchStatus status);

struct LineSearchOutcome {
    double t = 0.0;
    Vector x_new;
    double f_new = 0.0;
    Vector g_new;
    int evals = 0;
    LineSearchStatus status = LineSearchStatus::FailBisect;
};

/// Weak Wolfe line search by expansion and bisection, usable on nonsmooth
/// objectives. On Success the returned step satisfies
///   f(x + t d) <= f0 + c1 t (g0.d)      (sufficient decrease)
///   g(x + t d).d >= c2 (g0.d)           (weak curvature)
///
/// Starts at t = 1, doubles while decrease holds and curvature fails (up to
/// 30 doublings), then bisects the bracket (up to 50 steps). Non-finite trial
/// values shrink the bracket; they are never accepted. Requires g0.d < 0.
LineSearchOutcome weak_wolfe_search(const Objective& obj, const Vector& x, double f0,
                                    const Vector& g0, const Vector& d,
                                    const SolverOptions& opts, Counters& counters);

}  // namespace nsopt
