#pragma once

#include <optional>

namespace framepack {

// Coherence lower bound sqrt((n-m)/((n-1)m)); 0 with the vacuous flag when
// n <= m (an orthonormal set makes any positive bound false).
double welch_bound(int n, int m);

struct OrthoplexBound {
    double value = 0.0;  // 1/sqrt(m)
    bool applicable = false;  // n > D_1(m) + 1
};

OrthoplexBound orthoplex_bound(int n, int m);

// Sharp lower bound on max_{j != l} <v_j, v_l> over n unit vectors in R^d:
// -1/(n-1) in the simplex regime (n <= d+1), 0 beyond it.
double rankin_max_inner_lower(int n, int d);

// Coherence lower bounds from inverting the second-embedding polynomial on
// [1/m, infinity). Values are engaged only when the associated hypothesis
// holds (checked in exact integer arithmetic):
//   simplex: (n - D_1)(m-1)^2 >= D_1 (n-1)
//     bound = sqrt(1/m + sqrt((A - 1/m^2) - (D_1-1)(m-1)^2 / (m^2 D_1 (n-1))))
//   orthant: n > D_2 + 1 and (m-1)^2 >= D_1
//     bound = sqrt(1/m + sqrt(2(m-1)/(m^2 (m+2))))
struct SecondEmbeddingBound {
    std::optional<double> simplex_bound;
    bool simplex_applicable = false;
    std::optional<double> orthant_bound;
    bool orthant_applicable = false;
};

SecondEmbeddingBound second_embedding_coherence_bound(int n, int m);

// All closed-form bounds for the pair (n, m) plus the best applicable one.
struct BoundReport {
    int n = 0;
    int m = 0;
    double welch = 0.0;
    bool welch_vacuous = false;
    double orthoplex = 0.0;
    bool orthoplex_applicable = false;
    double rankin_simplex_target = 0.0;  // -1/(n-1), the embedded-space target
    std::optional<double> second_simplex_bound;
    bool second_simplex_applicable = false;
    std::optional<double> second_orthant_bound;
    bool second_orthant_applicable = false;
    double best_applicable = 0.0;
};

BoundReport bound_report(int n, int m);

}  // namespace framepack
