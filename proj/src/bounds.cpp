#include "framepack/bounds.hpp"

#include <cassert>
#include <cmath>

#include "framepack/embeddings.hpp"
#include "framepack/errors.hpp"

namespace framepack {

double welch_bound(int n, int m) {
    if (n < 2 || m < 1) throw ValidationError("welch_bound: need n >= 2, m >= 1");
    if (n <= m) return 0.0;
    return std::sqrt(double(n - m) / (double(n - 1) * double(m)));
}

OrthoplexBound orthoplex_bound(int n, int m) {
    if (n < 2 || m < 2) throw ValidationError("orthoplex_bound: need n >= 2, m >= 2");
    OrthoplexBound b;
    b.value = 1.0 / std::sqrt(double(m));
    b.applicable = n > embedding_dimension(1, m) + 1;
    return b;
}

double rankin_max_inner_lower(int n, int d) {
    if (n < 2 || d < 1) throw ValidationError("rankin_max_inner_lower: need n >= 2, d >= 1");
    return n <= d + 1 ? -1.0 / double(n - 1) : 0.0;
}

SecondEmbeddingBound second_embedding_coherence_bound(int n, int m) {
    if (n < 2 || m < 2)
        throw ValidationError("second_embedding_coherence_bound: need n >= 2, m >= 2");
    SecondEmbeddingBound out;
    const long long d1 = embedding_dimension(1, m);
    const long long d2 = embedding_dimension(2, m);
    const long long mm1_sq = (long long)(m - 1) * (m - 1);
    const double md = double(m);
    const double a_minus = 2.0 * (md - 1.0) / (md * md * (md + 2.0));  // A - 1/m^2

    // Simplex level: hypothesis (n - D_1)/(n - 1) >= D_1/(m-1)^2, checked by
    // cross multiplication so the E8 equality case 85/119 = 35/49 is exact.
    out.simplex_applicable = (long long)(n - d1) * mm1_sq >= d1 * (long long)(n - 1);
    if (out.simplex_applicable) {
        const double inner = a_minus -
            double(d1 - 1) * double(mm1_sq) / (md * md * double(d1) * double(n - 1));
        assert(inner >= 0.0);
        out.simplex_bound = std::sqrt(1.0 / md + std::sqrt(inner));
    }

    // Orthant level: n > D_2 + 1 and (m-1)^2 >= D_1 (the latter holds iff m >= 4).
    out.orthant_applicable = (long long)n > d2 + 1 && mm1_sq >= d1;
    if (out.orthant_applicable)
        out.orthant_bound = std::sqrt(1.0 / md + std::sqrt(a_minus));
    return out;
}

BoundReport bound_report(int n, int m) {
    BoundReport r;
    r.n = n;
    r.m = m;
    r.welch = welch_bound(n, m);
    r.welch_vacuous = n <= m;
    const OrthoplexBound ob = orthoplex_bound(n, m);
    r.orthoplex = ob.value;
    r.orthoplex_applicable = ob.applicable;
    r.rankin_simplex_target = -1.0 / double(n - 1);
    const SecondEmbeddingBound sb = second_embedding_coherence_bound(n, m);
    r.second_simplex_bound = sb.simplex_bound;
    r.second_simplex_applicable = sb.simplex_applicable;
    r.second_orthant_bound = sb.orthant_bound;
    r.second_orthant_applicable = sb.orthant_applicable;

    r.best_applicable = r.welch_vacuous ? 0.0 : r.welch;
    if (r.orthoplex_applicable) r.best_applicable = std::max(r.best_applicable, r.orthoplex);
    if (sb.simplex_bound) r.best_applicable = std::max(r.best_applicable, *sb.simplex_bound);
    if (sb.orthant_bound) r.best_applicable = std::max(r.best_applicable, *sb.orthant_bound);
    return r;
}

}  // namespace framepack
