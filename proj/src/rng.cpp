#include "nsopt/rng.hpp"

#include <cmath>

namespace nsopt {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

std::uint64_t stream_key(std::uint64_t master, std::string_view name,
                         std::uint64_t index, std::uint64_t salt) {
    std::uint64_t h = splitmix64(master);
    h = splitmix64(h ^ fnv1a(name));
    h = splitmix64(h ^ (index + 0x9e3779b97f4a7c15ULL));
    h = splitmix64(h ^ salt);
    return h;
}

double RandomStream::uniform() {
    // 53-bit mantissa from the top bits of the engine output.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

Eigen::VectorXd RandomStream::normal_vector(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = normal();
    return v;
}

Eigen::VectorXd RandomStream::in_ball(const Eigen::VectorXd& center, double radius) {
    const int n = static_cast<int>(center.size());
    Eigen::VectorXd dir = normal_vector(n);
    double norm = dir.norm();
    while (norm == 0.0) {  // astronomically unlikely; redraw keeps the draw valid
        dir = normal_vector(n);
        norm = dir.norm();
    }
    const double r = radius * std::pow(uniform(), 1.0 / static_cast<double>(n));
    return center + (r / norm) * dir;
}

}  // namespace nsopt
