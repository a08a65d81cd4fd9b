#include "nsopt/bfgs.hpp"

#include "nsopt/linesearch.hpp"
#include "nsopt/minnorm_qp.hpp"

#include <cmath>
#include <stdexcept>

namespace nsopt {

void GradientBundle::refresh(const Vector& x_now, const Vector& g_now, double evaldist) {
    for (auto it = entries_.begin(); it != entries_.end();) {
        if ((it->point - x_now).norm() > evaldist)
            it = entries_.erase(it);
        else
            ++it;
    }
    entries_.push_back({x_now, g_now});
    while (static_cast<int>(entries_.size()) > cap_) entries_.pop_front();
}

std::vector<Vector> GradientBundle::gradients() const {
    std::vector<Vector> g;
    g.reserve(entries_.size());
    for (const Entry& e : entries_) g.push_back(e.grad);
    return g;
}

RunResult bfgs_run(const Objective& obj, const Vector& x0, const SolverOptions& opts) {
    opts.validate();
    if (x0.size() != obj.dimension)
        throw std::invalid_argument("bfgs_run: x0 dimension does not match objective");

    const int n = obj.dimension;
    RunResult result;
    result.phase = Phase::Bfgs;

    EvalOutcome cur = evaluate_counted(obj, x0, result.counters);
    if (!cur.finite) {
        result.x_final = x0;
        result.f_final = cur.f;
        result.stationarity = std::numeric_limits<double>::infinity();
        result.reason = TerminationReason::EvalError;
        return result;
    }

    Vector x = x0;
    Vector x_best = x0;
    double f_best = cur.f;

    Matrix H = Matrix::Identity(n, n);
    GradientBundle bundle(opts.effective_bundle_cap(n));
    bundle.refresh(x, cur.g, opts.evaldist);

    HullSolution hull = min_norm_in_hull(bundle.gradients());
    double stationarity = hull.norm;

    int stagnant = 0;

    auto finish = [&](TerminationReason reason) {
        result.x_final = x_best;
        result.f_final = f_best;
        result.stationarity = stationarity;
        result.reason = reason;
        return result;
    };

    if (stationarity <= opts.normtol) return finish(TerminationReason::Optimal);

    while (true) {
        if (result.counters.n_iter >= opts.maxit) return finish(TerminationReason::MaxIter);

        Vector d = -(H * cur.g);
        if (!(cur.g.dot(d) < 0.0)) {
            // Rounding broke positive definiteness; restart the model.
            H = Matrix::Identity(n, n);
            d = -cur.g;
            if (!(cur.g.dot(d) < 0.0)) return finish(TerminationReason::LineSearchFail);
        }

        const LineSearchOutcome ls =
            weak_wolfe_search(obj, x, cur.f, cur.g, d, opts, result.counters);
        if (ls.status != LineSearchStatus::Success)
            return finish(TerminationReason::LineSearchFail);

        const Vector s = ls.x_new - x;
        const Vector y = ls.g_new - cur.g;
        const double sy = s.dot(y);
        if (sy > 1e-12 * s.norm() * y.norm()) {
            const Vector Hy = H * y;
            const double yHy = y.dot(Hy);
            const double rho = 1.0 / sy;
            H.noalias() += (rho * rho * yHy + rho) * (s * s.transpose());
            H.noalias() -= rho * (Hy * s.transpose() + s * Hy.transpose());
            H = 0.5 * (H + H.transpose());
        }
        // else: curvature too weak near a kink; keep the previous H.

        const double f_prev = cur.f;
        x = ls.x_new;
        cur.f = ls.f_new;
        cur.g = ls.g_new;
        if (cur.f < f_best) {
            f_best = cur.f;
            x_best = x;
        }
        result.counters.n_iter += 1;
        if (opts.record_trace) result.trace.push_back({cur.f, ls.t, d.norm()});

        bundle.refresh(x, cur.g, opts.evaldist);
        hull = min_norm_in_hull(bundle.gradients());
        stationarity = hull.norm;
        if (stationarity <= opts.normtol) return finish(TerminationReason::Optimal);

        if (opts.stagnation_check) {
            if (f_prev - cur.f < 1e-16 * (1.0 + std::abs(cur.f)))
                ++stagnant;
            else
                stagnant = 0;
            if (stagnant >= opts.stagnation_window) return finish(TerminationReason::Stagnation);
        }
    }
}

}  // namespace nsopt
