#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <random>
#include <string_view>

namespace nsopt {

/// Derives a substream seed from a master seed plus a textual key and index.
/// Identical inputs give identical seeds on every platform.
std::uint64_t stream_key(std::uint64_t master, std::string_view name,
                         std::uint64_t index, std::uint64_t salt = 0);

/// Deterministic random stream. Uniforms are built directly from mt19937_64
/// output and normals via Box-Muller, so sequences do not depend on the
/// standard library's distribution implementations.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform();

    /// Standard normal.
    double normal();

    Eigen::VectorXd normal_vector(int n);

    /// Uniform draw from the closed ball of given radius around center.
    Eigen::VectorXd in_ball(const Eigen::VectorXd& center, double radius);

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace nsopt
