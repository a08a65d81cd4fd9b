#include "nsopt/core.hpp"

#include <cmath>
#include <stdexcept>

namespace nsopt {

const char* to_string(TerminationReason reason) {
    switch (reason) {
        case TerminationReason::Optimal: return "Optimal";
        case TerminationReason::MaxIter: return "MaxIter";
        case TerminationReason::LineSearchFail: return "LineSearchFail";
        case TerminationReason::Stagnation: return "Stagnation";
        case TerminationReason::EvalError: return "EvalError";
    }
    return "Unknown";
}

const char* to_string(Phase phase) {
    switch (phase) {
        case Phase::Bfgs: return "bfgs";
        case Phase::Gsa: return "gsa";
        case Phase::BfgsThenGsa: return "bfgs+gsa";
    }
    return "unknown";
}

void SolverOptions::validate() const {
    if (!(normtol > 0.0)) throw std::invalid_argument("SolverOptions: normtol must be positive");
    if (!(evaldist > 0.0)) throw std::invalid_argument("SolverOptions: evaldist must be positive");
    if (maxit <= 0) throw std::invalid_argument("SolverOptions: maxit must be positive");
    if (!(0.0 < c1 && c1 < c2 && c2 < 1.0))
        throw std::invalid_argument("SolverOptions: need 0 < c1 < c2 < 1");
    if (bundle_cap < 0) throw std::invalid_argument("SolverOptions: bundle_cap must be non-negative");
}

int SolverOptions::effective_bundle_cap(int n) const {
    if (bundle_cap > 0) return bundle_cap;
    return std::min(100, 2 * n + 10);
}

EvalOutcome evaluate_counted(const Objective& obj, const Vector& x, Counters& counters) {
    if (x.size() != obj.dimension)
        throw std::invalid_argument("evaluate_counted: point dimension does not match objective");
    EvalOutcome out;
    out.g.resize(obj.dimension);
    out.f = obj.eval(x, out.g);
    counters.n_fev += 1;
    counters.n_gev += 1;
    out.finite = std::isfinite(out.f) && out.g.allFinite();
    return out;
}

}  // namespace nsopt
