#include "framepack/oracle.hpp"

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "framepack/bounds.hpp"
#include "framepack/errors.hpp"
#include "framepack/random.hpp"

namespace framepack {

namespace {

constexpr long long kShardSize = 1 << 16;

// Runs `body(shard_index, shard_samples, shard_seed)` over all shards on a
// small pool; the caller owns per-shard buffers so reduction order stays
// fixed regardless of scheduling.
template <typename Body>
void run_shards(long long samples, std::uint64_t seed, const Body& body) {
    const int shards = int((samples + kShardSize - 1) / kShardSize);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int s = next.fetch_add(1); s < shards; s = next.fetch_add(1)) {
            const long long lo = (long long)s * kShardSize;
            const long long count = std::min(kShardSize, samples - lo);
            body(s, count, SplitMix64::derive_seed(seed, std::uint64_t(s)));
        }
    };
    const unsigned pool =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                           unsigned(shards));
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < pool; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
}

}  // namespace

MonteCarloEstimate mc_k2(int m, long long samples, std::uint64_t seed) {
    if (m < 2 || m > 5)
        throw GuardError("mc_k2: densified comparison is guarded to 2 <= m <= 5");
    if (samples < 10000) throw ValidationError("mc_k2: need samples >= 10^4");

    const int m2 = m * m;
    const std::size_t m4 = std::size_t(m2) * std::size_t(m2);
    const int shards = int((samples + kShardSize - 1) / kShardSize);
    std::vector<std::vector<double>> partial(std::size_t(shards),
                                             std::vector<double>(m4, 0.0));

    run_shards(samples, seed, [&](int s, long long count, std::uint64_t shard_seed) {
        SplitMix64 rng(shard_seed);
        std::vector<double>& acc = partial[std::size_t(s)];
        for (long long it = 0; it < count; ++it) {
            const Eigen::VectorXd w = random_sphere_point(m, rng);
            std::size_t idx = 0;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    const double wij = w[i] * w[j];
                    for (int k = 0; k < m; ++k)
                        for (int l = 0; l < m; ++l) acc[idx++] += wij * w[k] * w[l];
                }
        }
    });

    std::vector<double> total(m4, 0.0);
    for (const auto& acc : partial)
        for (std::size_t i = 0; i < m4; ++i) total[i] += acc[i];

    MonteCarloEstimate est;
    est.m = m;
    est.samples = samples;
    est.seed = seed;
    est.estimate = Eigen::MatrixXd::Zero(m2, m2);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l)
                    est.estimate(i * m + k, j * m + l) =
                        total[std::size_t(((i * m + j) * m + k) * m + l)] /
                        double(samples);
    est.max_abs_error =
        (est.estimate - k2_analytic(m).densify()).cwiseAbs().maxCoeff();
    return est;
}

double mc_mean_q1(int m, long long samples, std::uint64_t seed) {
    if (m < 2) throw ValidationError("mc_mean_q1: m must be >= 2");
    if (samples < 1) throw ValidationError("mc_mean_q1: need samples >= 1");

    const int shards = int((samples + kShardSize - 1) / kShardSize);
    std::vector<Eigen::MatrixXd> partial(std::size_t(shards),
                                         Eigen::MatrixXd::Zero(m, m));
    run_shards(samples, seed, [&](int s, long long count, std::uint64_t shard_seed) {
        SplitMix64 rng(shard_seed);
        Eigen::MatrixXd& acc = partial[std::size_t(s)];
        for (long long it = 0; it < count; ++it) {
            const Eigen::VectorXd w = random_sphere_point(m, rng);
            acc.noalias() += w * w.transpose();
        }
    });

    Eigen::MatrixXd mean = Eigen::MatrixXd::Zero(m, m);
    for (const auto& acc : partial) mean += acc;
    mean /= double(samples);
    mean -= Eigen::MatrixXd::Identity(m, m) / double(m);
    return mean.cwiseAbs().maxCoeff();
}

EmbeddedGram brute_force_embedded_gram(const Frame& frame) {
    const int m = frame.dim();
    const int n = frame.size();
    if (m > 6 || n > 64)
        throw GuardError("brute_force_embedded_gram: guarded to m <= 6 and n <= 64");

    // Constants recomputed locally so this path is independent of
    // k2_analytic / q2_embed.
    const double md = double(m);
    const double d1 = (md + 2.0) * (md - 1.0) / 2.0;
    const double ca = (d1 + (md - 1.0) * (md - 1.0)) / (md * md * d1);
    const double cb = ca / 3.0;
    const std::size_t m4 = std::size_t(m) * m * m * m;

    std::vector<double> k2(m4);
    std::size_t idx = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l) {
                    double v = 0.0;
                    if (i == l && j == k) v += cb;
                    if (i == j && k == l) v += cb;
                    if (i == k && j == l) v += cb;
                    k2[idx++] = v;
                }

    std::vector<std::vector<double>> images(std::size_t(n),
                                             std::vector<double>(m4, 0.0));
    for (int t = 0; t < n; ++t) {
        const Eigen::VectorXd f = frame.vector(t);
        Eigen::MatrixXd q1 = f * f.transpose();
        for (int i = 0; i < m; ++i) q1(i, i) -= 1.0 / md;
        std::vector<double>& q2 = images[std::size_t(t)];
        idx = 0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k)
                    for (int l = 0; l < m; ++l) {
                        double v = q1(i, j) * q1(k, l) - k2[idx];
                        if (i == j && k == l) v += 1.0 / (md * md);
                        q2[idx++] = v;
                    }
    }

    auto dot = [m4](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (std::size_t i = 0; i < m4; ++i) s += a[i] * b[i];
        return s;
    };

    EmbeddedGram eg;
    eg.n = n;
    eg.m = m;
    eg.level = 2;
    eg.matrix.resize(n, n);
    std::vector<double> norms(std::size_t(n), 0.0);
    for (int j = 0; j < n; ++j) norms[std::size_t(j)] = std::sqrt(dot(images[j], images[j]));
    for (int j = 0; j < n; ++j)
        for (int l = j; l < n; ++l) {
            const double v = dot(images[std::size_t(j)], images[std::size_t(l)]) /
                             (norms[std::size_t(j)] * norms[std::size_t(l)]);
            eg.matrix(j, l) = eg.matrix(l, j) = v;
        }
    finalize_embedded_gram(eg);
    return eg;
}

namespace {

double bisect_poly(double target, int m, const char* route) {
    double lo = 1.0 / double(m), hi = 1.0;
    if (embedded_inner_poly(lo, m) > target || embedded_inner_poly(hi, m) < target)
        throw ValidationError(std::string("validate_bound_inversion: no root in "
                                          "bracket for the ") + route + " route");
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        (embedded_inner_poly(mid, m) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

InversionReport validate_bound_inversion(int n, int m) {
    InversionReport rep;
    rep.n = n;
    rep.m = m;
    const SecondEmbeddingBound bounds = second_embedding_coherence_bound(n, m);

    rep.simplex_applicable = bounds.simplex_applicable;
    if (bounds.simplex_bound) {
        rep.simplex_root_closed = *bounds.simplex_bound * *bounds.simplex_bound;
        rep.simplex_root_bisect = bisect_poly(-1.0 / double(n - 1), m, "simplex");
        rep.max_gap = std::max(rep.max_gap,
                               std::abs(rep.simplex_root_closed - rep.simplex_root_bisect));
    }
    rep.orthant_applicable = bounds.orthant_applicable;
    if (bounds.orthant_bound) {
        rep.orthant_root_closed = *bounds.orthant_bound * *bounds.orthant_bound;
        rep.orthant_root_bisect = bisect_poly(0.0, m, "orthant");
        rep.max_gap = std::max(rep.max_gap,
                               std::abs(rep.orthant_root_closed - rep.orthant_root_bisect));
    }
    return rep;
}

int orthant_dimension_crossover(int m_max) {
    for (int m = 2; m <= m_max; ++m)
        if ((long long)(m - 1) * (m - 1) >= embedding_dimension(1, m)) return m;
    return -1;
}

}  // namespace framepack
