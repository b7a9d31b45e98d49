#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "framepack/embeddings.hpp"
#include "framepack/frame.hpp"

namespace framepack {

// Monte-Carlo estimate of the 2-coherence tensor against its analytic form.
// Sampling is sharded with derived per-shard seeds and reduced in fixed shard
// order, so results are reproducible for a given (m, samples, seed) no matter
// how many workers run the shards.
struct MonteCarloEstimate {
    int m = 0;
    long long samples = 0;
    std::uint64_t seed = 0;
    Eigen::MatrixXd estimate;     // densified m^2 x m^2 average of (w w^T)^{x2}
    double max_abs_error = 0.0;   // vs k2_analytic(m), entrywise
};

// Requires 2 <= m <= 5 (densified comparison guard) and samples >= 10^4.
MonteCarloEstimate mc_k2(int m, long long samples, std::uint64_t seed);

// Max entrywise absolute value of the sample mean of Q^1(w); the zero-mean
// property says this decays like 1/sqrt(N).
double mc_mean_q1(int m, long long samples, std::uint64_t seed);

// Level-2 embedded Gram computed from first principles: every Q^2 image is
// materialized densely with locally recomputed constants and the Gram is
// normalized by the measured norms. Shares no arithmetic shortcuts with
// embedded_gram; used as the independent side of dual-path checks.
// Guarded to m <= 6, n <= 64.
EmbeddedGram brute_force_embedded_gram(const Frame& frame);

// Compares the closed-form second-embedding coherence bounds with a bisection
// root-finder on the governing polynomial. Gaps are reported in x = mu^2.
struct InversionReport {
    int n = 0;
    int m = 0;
    bool simplex_applicable = false;
    double simplex_root_closed = 0.0;
    double simplex_root_bisect = 0.0;
    bool orthant_applicable = false;
    double orthant_root_closed = 0.0;
    double orthant_root_bisect = 0.0;
    double max_gap = 0.0;  // over the applicable routes
};

InversionReport validate_bound_inversion(int n, int m);

// Smallest m in [2, m_max] with (m-1)^2 >= D_1(m), i.e. where the level-2
// orthant route becomes available; -1 if none. Equals 4 for m_max >= 4.
int orthant_dimension_crossover(int m_max);

}  // namespace framepack
