#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "framepack/frame.hpp"
#include "framepack/tolerances.hpp"

namespace framepack {

// Dimension of the smallest subspace containing the range of the t-th
// zero-mean embedding: D_1 = (m+2)(m-1)/2, D_{t+1} = (D_t+2)(D_t-1)/2.
// Exact integer arithmetic; throws std::overflow_error when the doubly
// exponential growth exceeds 64 bits.
long long embedding_dimension(int t, int m);

// Image of a unit vector under the first zero-mean embedding,
// x x^T - (1/m) I. Traceless; squared Frobenius norm (m-1)/m.
struct Q1Image {
    int m = 0;
    Eigen::MatrixXd matrix;
};

Q1Image q1_embed(const Eigen::VectorXd& x);

// Hilbert-Schmidt inner product <q1(x), q1(y)> = <x,y>^2 - 1/m.
double q1_hs_inner(const Q1Image& a, const Q1Image& b);

// Analytic 2-coherence tensor for R^m: the Haar average of (U P U^T)^{x2}
// over the orthogonal group, P a rank-one projection. Fully determined by
// the two constants A and B = A/3 on a sparse support of matrix-unit
// tensor positions; everything off the support vanishes.
struct CoherenceTensor2 {
    int m = 0;
    double A = 0.0;
    double B = 0.0;
    // (i,j,k,l) meaning coefficient of E_ij (x) E_kl.
    std::map<std::array<int, 4>, double> support;

    // O(1) analytic entry (consults the delta pattern, not the map).
    double entry(int i, int j, int k, int l) const;
    // V^2 = K^2 - (1/m^2) I (x) I, the expectation subtracted by Q^2.
    double variance_entry(int i, int j, int k, int l) const;
    // m^2 x m^2 operator form, M[(i*m+k), (j*m+l)] = entry(i,j,k,l).
    Eigen::MatrixXd densify(std::size_t mem_guard_bytes = kDefaultMemGuard) const;
};

CoherenceTensor2 k2_analytic(int m);

// Squared Frobenius norm of any second-embedding image:
// 1 - 2/m + 2/m^2 - A. Independent of the embedded vector.
double q2_squared_norm(int m);

// Image of a unit vector under the second zero-mean embedding,
// q1(x) (x) q1(x) - K^2 + (1/m^2) I (x) I, flattened in row-major
// quadruple order (i,j,k,l) -> ((i*m+j)*m+k)*m+l.
struct Q2Image {
    int m = 0;
    std::vector<double> tensor;  // length m^4

    double at(int i, int j, int k, int l) const {
        return tensor[std::size_t(((i * m + j) * m + k) * m + l)];
    }
};

Q2Image q2_embed(const Eigen::VectorXd& x, const CoherenceTensor2& k2);

double q2_hs_inner(const Q2Image& a, const Q2Image& b);

// Normalized inner product of two second-embedding images whose underlying
// vectors have absolute cosine c:
//   (m^2 (m+2) / (m^3 - 5m + 4)) ((c^2 - 1/m)^2 - 2(m-1)/(m^2 (m+2))).
double embedded_inner_closed_form(double c, int m);

// Same quantity as a function of x = c^2; decreasing on [0, 1/m] and
// increasing on [1/m, inf). This is the polynomial the coherence bounds
// invert.
double embedded_inner_poly(double x, int m);

enum class GramMethod { ClosedForm, Tensor };

// Gram matrix of the normalized level-1 or level-2 embedding images.
struct EmbeddedGram {
    int n = 0;
    int m = 0;
    int level = 1;
    Eigen::MatrixXd matrix;                 // n x n, unit diagonal
    std::vector<double> signed_cosine_set;  // clustered off-diagonal values
    int rank = 0;                           // numerical rank
    double max_offdiag = 0.0;               // signed maximum off the diagonal
};

EmbeddedGram embedded_gram(const Frame& frame, int level,
                           GramMethod method = GramMethod::ClosedForm,
                           std::size_t mem_guard_bytes = kDefaultMemGuard,
                           double cluster_tol = kClusterTol);

// Fills the derived fields (signed cosine set, rank, max off-diagonal) from
// eg.matrix; for callers that assemble the matrix themselves.
void finalize_embedded_gram(EmbeddedGram& eg, double cluster_tol = kClusterTol);

// Max deviation of the off-diagonal entries from -1/(n-1).
double simplex_deviation(const EmbeddedGram& eg);

// Coordinates of the embedded vectors in R^{D_level(m)} via symmetric
// eigenfactorization of the Gram; columns are vectors, zero-padded (or
// truncated) to exactly D_level(m) rows.
Eigen::MatrixXd embed_coordinates(const EmbeddedGram& eg, int m,
                                  double rank_tol = kRankTol,
                                  std::size_t mem_guard_bytes = kDefaultMemGuard);

}  // namespace framepack
