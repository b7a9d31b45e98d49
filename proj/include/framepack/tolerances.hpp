#pragma once

#include <cstddef>

namespace framepack {

// Default tolerances. Gallery constructions are exact algebraic data, so the
// defaults are tight; callers may widen them for noisy inputs.
inline constexpr double kUnitTol = 1e-10;    // unit-norm validation
inline constexpr double kClusterTol = 1e-8;  // single-linkage gap for cosine sets
inline constexpr double kTightTol = 1e-9;    // max-entry norm of S - (n/m) I
inline constexpr double kDedupTol = 1e-8;    // sign normalization / line matching
inline constexpr double kCertifyTol = 1e-8;  // embedded-Gram deviation for certificates
inline constexpr double kRankTol = 1e-8;     // eigenvalue cutoff relative to largest
inline constexpr double kSpanTol = 1e-10;    // smallest/largest frame-operator eigenvalue

inline constexpr std::size_t kDefaultMemGuard = std::size_t(512) << 20;  // 512 MB

}  // namespace framepack
