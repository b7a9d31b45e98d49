#include "framepack/random.hpp"

#include <cmath>

namespace framepack {

double SplitMix64::next_gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 bounded away from 0 by next_unit().
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

std::uint64_t SplitMix64::derive_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
    return mix.next_u64();
}

Eigen::VectorXd random_sphere_point(int m, SplitMix64& rng) {
    Eigen::VectorXd v(m);
    double norm = 0.0;
    do {
        for (int i = 0; i < m; ++i) v[i] = rng.next_gaussian();
        norm = v.norm();
    } while (norm < 1e-12);
    return v / norm;
}

Eigen::MatrixXd random_orthogonal(int m, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Eigen::MatrixXd g(m, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) g(i, j) = rng.next_gaussian();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < m; ++j)
        if (r(j, j) < 0.0) q.col(j) = -q.col(j);
    return q;
}

}  // namespace framepack
