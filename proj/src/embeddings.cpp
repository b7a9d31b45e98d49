#include "framepack/embeddings.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "framepack/errors.hpp"

namespace framepack {

long long embedding_dimension(int t, int m) {
    if (t < 1) throw ValidationError("embedding_dimension: t must be >= 1");
    if (m < 2) throw ValidationError("embedding_dimension: m must be >= 2");
    long long d = (long long)(m + 2) * (m - 1) / 2;
    for (int level = 1; level < t; ++level) {
        // D <- (D+2)(D-1)/2, with one factor even so the halving is exact.
        long long a = d + 2, b = d - 1;
        if (a % 2 == 0) a /= 2; else b /= 2;
        long long next = 0;
        if (__builtin_mul_overflow(a, b, &next))
            throw std::overflow_error("embedding_dimension overflows 64 bits at t=" +
                                      std::to_string(level + 1));
        d = next;
    }
    return d;
}

Q1Image q1_embed(const Eigen::VectorXd& x) {
    const int m = int(x.size());
    if (m < 2) throw ValidationError("q1_embed: dimension must be >= 2");
    if (std::abs(x.norm() - 1.0) > kUnitTol)
        throw ValidationError("q1_embed: input is not unit norm");
    Q1Image q;
    q.m = m;
    q.matrix = x * x.transpose() - Eigen::MatrixXd::Identity(m, m) / double(m);
    return q;
}

double q1_hs_inner(const Q1Image& a, const Q1Image& b) {
    if (a.m != b.m) throw ValidationError("q1_hs_inner: dimension mismatch");
    return (a.matrix.array() * b.matrix.array()).sum();
}

double CoherenceTensor2::entry(int i, int j, int k, int l) const {
    double v = 0.0;
    if (i == l && j == k) v += B;
    if (i == j && k == l) v += B;
    if (i == k && j == l) v += B;
    return v;
}

double CoherenceTensor2::variance_entry(int i, int j, int k, int l) const {
    double v = entry(i, j, k, l);
    if (i == j && k == l) v -= 1.0 / (double(m) * double(m));
    return v;
}

Eigen::MatrixXd CoherenceTensor2::densify(std::size_t mem_guard_bytes) const {
    const std::size_t mm = std::size_t(m) * std::size_t(m);
    if (mm * mm * sizeof(double) > mem_guard_bytes)
        throw GuardError("densify: m^4 doubles exceed the memory guard");
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(Eigen::Index(mm), Eigen::Index(mm));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l)
                    mat(i * m + k, j * m + l) = entry(i, j, k, l);
    return mat;
}

CoherenceTensor2 k2_analytic(int m) {
    if (m < 2) throw ValidationError("k2_analytic: m must be >= 2");
    CoherenceTensor2 k2;
    k2.m = m;
    const double d1 = double(embedding_dimension(1, m));
    k2.A = (d1 + double(m - 1) * double(m - 1)) / (double(m) * double(m) * d1);
    k2.B = k2.A / 3.0;
    for (int j = 0; j < m; ++j) k2.support[{j, j, j, j}] = k2.A;
    for (int j = 0; j < m; ++j) {
        for (int jp = 0; jp < m; ++jp) {
            if (j == jp) continue;
            k2.support[{j, jp, jp, j}] = k2.B;  // E_{jj'} (x) E_{j'j}
            k2.support[{j, j, jp, jp}] = k2.B;  // E_{jj}  (x) E_{j'j'}
            k2.support[{j, jp, j, jp}] = k2.B;  // E_{jj'} (x) E_{jj'}
        }
    }
    return k2;
}

double q2_squared_norm(int m) {
    const double md = double(m);
    return 1.0 - 2.0 / md + 2.0 / (md * md) - k2_analytic(m).A;
}

Q2Image q2_embed(const Eigen::VectorXd& x, const CoherenceTensor2& k2) {
    const int m = int(x.size());
    if (m != k2.m) throw ValidationError("q2_embed: dimension mismatch with K^2");
    const Q1Image q1 = q1_embed(x);
    const double inv_m2 = 1.0 / (double(m) * double(m));
    Q2Image q2;
    q2.m = m;
    q2.tensor.resize(std::size_t(m) * m * m * m);
    std::size_t idx = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l) {
                    double v = q1.matrix(i, j) * q1.matrix(k, l) - k2.entry(i, j, k, l);
                    if (i == j && k == l) v += inv_m2;
                    q2.tensor[idx++] = v;
                }
    return q2;
}

double q2_hs_inner(const Q2Image& a, const Q2Image& b) {
    if (a.m != b.m) throw ValidationError("q2_hs_inner: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.tensor.size(); ++i) s += a.tensor[i] * b.tensor[i];
    return s;
}

double embedded_inner_poly(double x, int m) {
    if (m < 2) throw ValidationError("embedded_inner_poly: m must be >= 2");
    const double md = double(m);
    const double denom = md * md * md - 5.0 * md + 4.0;  // (m-1)(m^2+m-4)
    assert(denom > 0.0);
    const double coeff = md * md * (md + 2.0) / denom;
    const double shift = 2.0 * (md - 1.0) / (md * md * (md + 2.0));
    const double t = x - 1.0 / md;
    return coeff * (t * t - shift);
}

double embedded_inner_closed_form(double c, int m) {
    if (c < 0.0 || c > 1.0 + 1e-9)
        throw ValidationError("embedded_inner_closed_form: cosine outside [0, 1]");
    if (c > 1.0) c = 1.0;
    return embedded_inner_poly(c * c, m);
}

void finalize_embedded_gram(EmbeddedGram& eg, double cluster_tol) {
    const int n = eg.n;
    std::vector<double> offdiag;
    offdiag.reserve(std::size_t(n) * (n - 1) / 2);
    double maxoff = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j)
        for (int l = j + 1; l < n; ++l) {
            offdiag.push_back(eg.matrix(j, l));
            maxoff = std::max(maxoff, eg.matrix(j, l));
        }
    eg.max_offdiag = offdiag.empty() ? 0.0 : maxoff;
    eg.signed_cosine_set = cluster_values(std::move(offdiag), cluster_tol);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(eg.matrix, Eigen::EigenvaluesOnly);
    const double lmax = es.eigenvalues().maxCoeff();
    int rank = 0;
    for (int i = 0; i < n; ++i)
        if (es.eigenvalues()[i] > kRankTol * lmax) ++rank;
    eg.rank = rank;
}

EmbeddedGram embedded_gram(const Frame& frame, int level, GramMethod method,
                           std::size_t mem_guard_bytes, double cluster_tol) {
    if (level != 1 && level != 2)
        throw ValidationError("embedded_gram: level must be 1 or 2");
    const int m = frame.dim();
    const int n = frame.size();

    EmbeddedGram eg;
    eg.n = n;
    eg.m = m;
    eg.level = level;
    eg.matrix = Eigen::MatrixXd::Identity(n, n);

    if (method == GramMethod::ClosedForm) {
        const Eigen::MatrixXd gram = frame.columns().transpose() * frame.columns();
        for (int j = 0; j < n; ++j)
            for (int l = j + 1; l < n; ++l) {
                const double c = std::min(std::abs(gram(j, l)), 1.0);
                const double v = level == 1
                    ? (c * c - 1.0 / m) * double(m) / double(m - 1)
                    : embedded_inner_poly(c * c, m);
                eg.matrix(j, l) = eg.matrix(l, j) = v;
            }
    } else if (level == 1) {
        std::vector<Q1Image> images;
        images.reserve(n);
        for (int j = 0; j < n; ++j) images.push_back(q1_embed(frame.vector(j)));
        for (int j = 0; j < n; ++j)
            for (int l = j; l < n; ++l) {
                const double v = q1_hs_inner(images[j], images[l]) /
                    std::sqrt(q1_hs_inner(images[j], images[j]) *
                              q1_hs_inner(images[l], images[l]));
                eg.matrix(j, l) = eg.matrix(l, j) = v;
            }
    } else {
        const std::size_t m4 = std::size_t(m) * m * m * m;
        if (std::size_t(n) * m4 * sizeof(double) > mem_guard_bytes)
            throw GuardError("embedded_gram: tensor method needs n*m^4 doubles, "
                             "which exceeds the memory guard");
        const CoherenceTensor2 k2 = k2_analytic(m);
        const double norm_sq = q2_squared_norm(m);
        std::vector<Q2Image> images;
        images.reserve(n);
        for (int j = 0; j < n; ++j) images.push_back(q2_embed(frame.vector(j), k2));
        for (int j = 0; j < n; ++j)
            for (int l = j; l < n; ++l) {
                const double v = q2_hs_inner(images[j], images[l]) / norm_sq;
                eg.matrix(j, l) = eg.matrix(l, j) = v;
            }
    }

    finalize_embedded_gram(eg, cluster_tol);
    return eg;
}

double simplex_deviation(const EmbeddedGram& eg) {
    if (eg.n < 2) return 0.0;
    const double target = -1.0 / double(eg.n - 1);
    double dev = 0.0;
    for (int j = 0; j < eg.n; ++j)
        for (int l = j + 1; l < eg.n; ++l)
            dev = std::max(dev, std::abs(eg.matrix(j, l) - target));
    return dev;
}

Eigen::MatrixXd embed_coordinates(const EmbeddedGram& eg, int m, double rank_tol,
                                  std::size_t mem_guard_bytes) {
    const int n = eg.n;
    const long long dim = embedding_dimension(eg.level, m);
    if (std::size_t(dim) * std::size_t(n) * sizeof(double) > mem_guard_bytes)
        throw GuardError("embed_coordinates: D_level * n doubles exceed the memory guard");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(eg.matrix);
    const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
    const double lmax = ev.maxCoeff();
    if (ev.minCoeff() < -1e-6 * lmax)
        throw ValidationError("embed_coordinates: Gram has a significantly negative "
                              "eigenvalue; not positive semidefinite");

    std::vector<int> kept;  // descending eigenvalue order
    for (int i = n - 1; i >= 0; --i)
        if (ev[i] > rank_tol * lmax) kept.push_back(i);
    if ((long long)kept.size() > dim) kept.resize(std::size_t(dim));

    Eigen::MatrixXd coords = Eigen::MatrixXd::Zero(Eigen::Index(dim), n);
    for (std::size_t r = 0; r < kept.size(); ++r)
        coords.row(Eigen::Index(r)) =
            std::sqrt(ev[kept[r]]) * es.eigenvectors().col(kept[r]).transpose();
    return coords;
}

}  // namespace framepack
