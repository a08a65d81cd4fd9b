#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nsopt {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Registry metadata for a benchmark problem.
struct ProblemMeta {
    std::string name;
    int dimension = 0;
    double f_star = 0.0;
    bool convex = false;
};

/// A nonsmooth objective. `eval` returns f and fills the gradient (one valid
/// subgradient at nondifferentiable points) in a single joint evaluation.
struct Objective {
    std::string name;
    int dimension = 0;
    std::function<double(const Vector& x, Vector& grad)> eval;
    std::optional<ProblemMeta> meta;
};

struct Counters {
    std::int64_t n_iter = 0;
    std::int64_t n_fev = 0;
    std::int64_t n_gev = 0;
};

enum class TerminationReason {
    Optimal,
    MaxIter,
    LineSearchFail,
    Stagnation,
    EvalError,
};

const char* to_string(TerminationReason reason);

enum class Phase { Bfgs, Gsa, BfgsThenGsa };

const char* to_string(Phase phase);

struct SolverOptions {
    double normtol = 1e-6;   // tolerance on the min-norm hull vector
    double evaldist = 1e-4;  // bundle locality radius
    int maxit = 1000;
    double c1 = 1e-4;  // sufficient decrease constant
    double c2 = 0.5;   // weak curvature constant
    int bundle_cap = 0;  // 0 selects min(100, 2n + 10)
    std::uint64_t rng_seed = 0;
    // Loop guard on negligible decrease; disabled in benchmark runs, where
    // termination is governed by normtol and maxit alone.
    bool stagnation_check = true;
    int stagnation_window = 10;
    bool record_trace = false;

    /// Throws std::invalid_argument when tolerances or constants are out of range.
    void validate() const;

    int effective_bundle_cap(int n) const;
};

struct TracePoint {
    double f = 0.0;
    double step = 0.0;
    double dirnorm = 0.0;
};

struct RunResult {
    Vector x_final;
    double f_final = 0.0;
    double stationarity = 0.0;  // norm of the min-norm hull vector at exit
    TerminationReason reason = TerminationReason::MaxIter;
    Counters counters;
    Phase phase = Phase::Bfgs;
    std::vector<TracePoint> trace;
};

/// Joint (f, g) evaluation result. `finite` is false when f or any gradient
/// entry is not finite; callers decide how a non-finite trial propagates.
struct EvalOutcome {
    double f = 0.0;
    Vector g;
    bool finite = true;
};

/// Evaluates `obj` at `x`, incrementing n_fev and n_gev by one each.
EvalOutcome evaluate_counted(const Objective& obj, const Vector& x, Counters& counters);

}  // namespace nsopt
