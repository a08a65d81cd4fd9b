#include "nsopt/minnorm_qp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nsopt {

namespace {

constexpr double kDropTol = 1e-14;       // weights at or below this leave the active set
constexpr double kMajorTol = 1e-12;      // relative optimality margin of the active-set loop
constexpr double kCertSlack = 1e-8;      // certificate slack promised to callers

Vector combine(const std::vector<Vector>& g, const Vector& lambda) {
    Vector x = Vector::Zero(g.front().size());
    for (int i = 0; i < lambda.size(); ++i) {
        if (lambda[i] != 0.0) x += lambda[i] * g[static_cast<std::size_t>(i)];
    }
    return x;
}

Vector project_to_simplex(Vector v) {
    // Euclidean projection onto the unit simplex (sort-based).
    const int k = static_cast<int>(v.size());
    std::vector<double> u(v.data(), v.data() + k);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double css = 0.0;
    double tau = 0.0;
    int rho = 0;
    for (int i = 0; i < k; ++i) {
        css += u[static_cast<std::size_t>(i)];
        const double t = (css - 1.0) / (i + 1);
        if (u[static_cast<std::size_t>(i)] - t > 0.0) {
            rho = i + 1;
            tau = t;
        }
    }
    (void)rho;
    for (int i = 0; i < k; ++i) v[i] = std::max(0.0, v[i] - tau);
    return v;
}

// Fallback for instances where the active-set linear solves go singular:
// projected gradient on the simplex for min lambda' Q lambda.
Vector projected_gradient_simplex(const Matrix& Q, int iters) {
    const int k = static_cast<int>(Q.rows());
    Vector lambda = Vector::Constant(k, 1.0 / k);
    double lip = 2.0 * Q.cwiseAbs().rowwise().sum().maxCoeff();
    if (!(lip > 0.0)) lip = 1.0;
    const double step = 1.0 / lip;
    double prev = std::numeric_limits<double>::infinity();
    for (int it = 0; it < iters; ++it) {
        const Vector grad = 2.0 * (Q * lambda);
        lambda = project_to_simplex(lambda - step * grad);
        const double val = lambda.dot(Q * lambda);
        if (std::abs(prev - val) <= 1e-10 * (1.0 + std::abs(val))) break;
        prev = val;
    }
    return lambda;
}

// Affine minimizer of ||G_S alpha|| subject to sum(alpha) = 1, expressed via
// the KKT system on the Gram block of the active set.
bool affine_minimizer(const Matrix& gram, const std::vector<int>& active, Vector& alpha) {
    const int s = static_cast<int>(active.size());
    Matrix kkt(s + 1, s + 1);
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            kkt(a, b) = gram(active[static_cast<std::size_t>(a)], active[static_cast<std::size_t>(b)]);
    for (int a = 0; a < s; ++a) {
        kkt(a, s) = 1.0;
        kkt(s, a) = 1.0;
    }
    kkt(s, s) = 0.0;
    Vector rhs = Vector::Zero(s + 1);
    rhs[s] = 1.0;
    Eigen::FullPivLU<Matrix> lu(kkt);
    if (!lu.isInvertible()) return false;
    const Vector sol = lu.solve(rhs);
    alpha = sol.head(s);
    return alpha.allFinite();
}

}  // namespace

HullSolution min_norm_in_hull(const std::vector<Vector>& gradients) {
    if (gradients.empty())
        throw std::invalid_argument("min_norm_in_hull: need at least one vector");
    const int k = static_cast<int>(gradients.size());
    const Eigen::Index n = gradients.front().size();
    for (const Vector& g : gradients)
        if (g.size() != n)
            throw std::invalid_argument("min_norm_in_hull: inconsistent vector lengths");

    HullSolution out;
    out.lambda = Vector::Zero(k);

    if (k == 1) {
        out.lambda[0] = 1.0;
        out.g_star = gradients[0];
        out.norm = out.g_star.norm();
        return out;
    }

    Matrix gram(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= i; ++j)
            gram(i, j) = gram(j, i) = gradients[static_cast<std::size_t>(i)].dot(
                gradients[static_cast<std::size_t>(j)]);

    // Start from the shortest input vector.
    int start = 0;
    for (int i = 1; i < k; ++i)
        if (gram(i, i) < gram(start, start)) start = i;

    std::vector<int> active{start};
    Vector weights = Vector::Ones(1);
    bool degenerate = false;

    const int max_major = 16 * k + 64;
    for (int major = 0; major < max_major && !degenerate; ++major) {
        // dots[j] = g_j . x for the current hull point x = G_S w.
        Vector dots = Vector::Zero(k);
        for (int a = 0; a < static_cast<int>(active.size()); ++a)
            dots += weights[a] * gram.col(active[static_cast<std::size_t>(a)]);
        double xx = 0.0;
        for (int a = 0; a < static_cast<int>(active.size()); ++a)
            xx += weights[a] * dots[active[static_cast<std::size_t>(a)]];
        xx = std::max(xx, 0.0);

        int jmin = 0;
        for (int j = 1; j < k; ++j)
            if (dots[j] < dots[jmin]) jmin = j;
        if (dots[jmin] >= xx - kMajorTol * (1.0 + xx)) break;  // optimality certificate
        if (std::find(active.begin(), active.end(), jmin) != active.end()) break;

        active.push_back(jmin);
        Vector lam = Vector::Zero(active.size());
        lam.head(weights.size()) = weights;

        // Minor cycle: shrink the active set until the affine minimizer is feasible.
        while (true) {
            Vector alpha;
            if (!affine_minimizer(gram, active, alpha)) {
                degenerate = true;
                break;
            }
            if (alpha.minCoeff() > kDropTol) {
                weights = alpha;
                break;
            }
            double theta = 1.0;
            for (int a = 0; a < alpha.size(); ++a) {
                if (alpha[a] <= kDropTol && lam[a] > alpha[a])
                    theta = std::min(theta, lam[a] / (lam[a] - alpha[a]));
            }
            lam = lam + theta * (alpha - lam);
            std::vector<int> keep_idx;
            std::vector<double> keep_w;
            for (int a = 0; a < lam.size(); ++a) {
                if (lam[a] > kDropTol) {
                    keep_idx.push_back(active[static_cast<std::size_t>(a)]);
                    keep_w.push_back(lam[a]);
                }
            }
            if (keep_idx.empty()) {  // numerically wiped out; restart from nearest vertex
                keep_idx.push_back(jmin);
                keep_w.push_back(1.0);
            }
            active = keep_idx;
            lam = Eigen::Map<Vector>(keep_w.data(), static_cast<Eigen::Index>(keep_w.size()));
            if (static_cast<int>(active.size()) == 1) {
                weights = lam;
                break;
            }
        }
    }

    Vector lambda = Vector::Zero(k);
    if (degenerate) {
        lambda = projected_gradient_simplex(gram, 20000);
    } else {
        for (int a = 0; a < static_cast<int>(active.size()); ++a)
            lambda[active[static_cast<std::size_t>(a)]] = weights[a];
    }

    // Clean and renormalize so the simplex invariants hold exactly as promised.
    for (int i = 0; i < k; ++i) lambda[i] = std::max(lambda[i], 0.0);
    const double total = lambda.sum();
    if (total > 0.0)
        lambda /= total;
    else
        lambda[start] = 1.0;

    out.lambda = lambda;
    out.g_star = combine(gradients, lambda);
    out.norm = out.g_star.norm();

    // The certificate the callers rely on; fall back if the active-set path
    // left it unsatisfied (rank-deficient Gram with conflicting duplicates).
    if (!degenerate) {
        const double floor_val = out.norm * out.norm - kCertSlack * (1.0 + out.norm * out.norm);
        for (int i = 0; i < k; ++i) {
            if (gradients[static_cast<std::size_t>(i)].dot(out.g_star) < floor_val) {
                lambda = projected_gradient_simplex(gram, 20000);
                out.lambda = lambda / lambda.sum();
                out.g_star = combine(gradients, out.lambda);
                out.norm = out.g_star.norm();
                break;
            }
        }
    }
    return out;
}

}  // namespace nsopt
