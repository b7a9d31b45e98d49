#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace framepack {

// Counter-free splitmix64 stream. Bit-exact across platforms, so seeded
// constructions (gallery_random, Monte-Carlo shards) reproduce everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in (0, 1).
    double next_unit() {
        return (double(next_u64() >> 11) + 0.5) * 0x1p-53;
    }

    double next_gaussian();

    // Decorrelated stream for shard `index` of a run seeded with `seed`.
    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Uniform point on the unit sphere of R^m (normalized Gaussians).
Eigen::VectorXd random_sphere_point(int m, SplitMix64& rng);

// Haar-distributed orthogonal matrix (QR of a Gaussian matrix with the
// R-diagonal sign fix).
Eigen::MatrixXd random_orthogonal(int m, std::uint64_t seed);

}  // namespace framepack
