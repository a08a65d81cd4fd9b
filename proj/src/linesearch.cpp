#include "nsopt/linesearch.hpp"

#include <limits>
#include <stdexcept>

namespace nsopt {

namespace {
constexpr int kMaxExpansions = 30;
constexpr int kMaxBisections = 50;
}  // namespace

const char* to_string(LineSearchStatus status) {
    switch (status) {
        case LineSearchStatus::Success: return "Success";
        case LineSearchStatus::FailBracket: return "FailBracket";
        case LineSearchStatus::FailBisect: return "FailBisect";
    }
    return "Unknown";
}

LineSearchOutcome weak_wolfe_search(const Objective& obj, const Vector& x, double f0,
                                    const Vector& g0, const Vector& d,
                                    const SolverOptions& opts, Counters& counters) {
    const double g0d = g0.dot(d);
    if (!(g0d < 0.0))
        throw std::invalid_argument("weak_wolfe_search: d is not a descent direction");

    LineSearchOutcome out;
    double lo = 0.0;  // largest step so far with sufficient decrease
    double hi = std::numeric_limits<double>::infinity();
    double t = 1.0;
    int expansions = 0;
    int bisections = 0;

    while (true) {
        const Vector xt = x + t * d;
        const EvalOutcome trial = evaluate_counted(obj, xt, counters);
        out.evals += 1;

        const bool decrease_ok = trial.finite && trial.f <= f0 + opts.c1 * t * g0d;
        const bool curvature_ok = trial.finite && trial.g.dot(d) >= opts.c2 * g0d;

        if (decrease_ok && curvature_ok) {
            out.t = t;
            out.x_new = xt;
            out.f_new = trial.f;
            out.g_new = trial.g;
            out.status = LineSearchStatus::Success;
            return out;
        }

        if (!decrease_ok) {
            hi = t;  // overshoot (or non-finite trial): step must shrink
        } else {
            lo = t;  // decrease holds, curvature fails: step must grow
        }

        if (hi < std::numeric_limits<double>::infinity()) {
            if (bisections >= kMaxBisections) {
                out.t = t;
                out.x_new = xt;
                out.f_new = trial.f;
                out.g_new = trial.g;
                out.status = LineSearchStatus::FailBisect;
                return out;
            }
            ++bisections;
            t = 0.5 * (lo + hi);
        } else {
            if (expansions >= kMaxExpansions) {
                out.t = t;
                out.x_new = xt;
                out.f_new = trial.f;
                out.g_new = trial.g;
                out.status = LineSearchStatus::FailBracket;
                return out;
            }
            ++expansions;
            t = 2.0 * t;
        }
    }
}

}  // namespace nsopt
