#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framepack/frame.hpp"
#include "framepack/tolerances.hpp"

namespace framepack {

enum class Verdict {
    CertifiedGrassmannian,     // a theorem route fired; coherence is optimal
    SaturatesBoundUnverified,  // embedded Gram is Rankin-optimal, side conditions fail
    Undetermined,
};

enum class CertRoute { Simplex, Orthant, None };

struct CertCondition {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct Certificate {
    int level = 0;  // 1 or 2
    CertRoute route = CertRoute::None;
    std::vector<CertCondition> conditions;
    Verdict verdict = Verdict::Undetermined;
    double coherence = 0.0;
    std::optional<double> certified_constant;  // mu_{n,m}(R) when certified
};

// First-embedding certification: the Q^1 images form a simplex, or there are
// more than D_1+1 of them with pairwise non-positive inner products. Deviations
// are measured in the max norm against `tol`. Throws on non-spanning input.
Certificate certify_level1(const Frame& frame, double tol = kCertifyTol);

// Second-embedding certification: the simplex route additionally needs
// (n - D_1)/(n - 1) >= D_1/(m-1)^2, the orthant route needs n > D_2 + 1 and
// (m-1)^2 >= D_1. A Rankin-optimal embedded Gram whose side conditions fail
// is reported as SaturatesBoundUnverified. Throws on non-spanning input.
Certificate certify_level2(const Frame& frame, double tol = kCertifyTol);

const char* to_string(Verdict v);
const char* to_string(CertRoute r);

}  // namespace framepack
