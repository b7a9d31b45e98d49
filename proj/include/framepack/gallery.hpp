#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "framepack/certify.hpp"
#include "framepack/frame.hpp"

namespace framepack {

// Reference values a construction is known to produce; regression tests and
// the CLI round-trip check compare module outputs against these. Empty
// vectors / negative coherence mean "not pinned for this entry".
struct GalleryExpected {
    std::vector<double> cosine_set;             // ascending
    double coherence = -1.0;
    std::vector<double> level2_signed_cosines;  // ascending
    std::optional<Verdict> verdict;
    int verdict_level = 0;
};

struct GalleryEntry {
    std::string key;
    Frame frame;
    GalleryExpected expected;
};

// Three mutually unbiased orthonormal bases of R^4 (12 vectors, cosines
// {0, 1/2}). Construction is validated before returning.
GalleryEntry gallery_mub_r4();

// The 16 lines through antipodal vertex pairs of the biscribed pentakis
// dodecahedron: a unit-norm tight frame for R^3 whose second embedding is a
// Rankin-optimal cap packing. The cosine set is validated against its
// golden-ratio closed forms before returning.
GalleryEntry gallery_pentakis16();

// One representative per antipodal pair of the 240 minimal E8 lattice
// vectors: 120 unit vectors in R^8 with cosines {0, 1/2}.
GalleryEntry gallery_e8_120();

// Regular simplex of m+1 unit vectors in R^m, pairwise inner product -1/m.
// With `lines`, the antipodal-dedup sign convention is applied, giving line
// representatives with cosine 1/m.
GalleryEntry gallery_simplex(int m, bool lines = false);

// n seeded uniform sphere points in R^m; identical across runs for a fixed
// seed.
GalleryEntry gallery_random(int m, int n, std::uint64_t seed);

// Parses "mub-r4", "pentakis16", "e8-120", "simplex-<m>",
// "random-<m>-<n>-<seed>". Throws ValidationError for unknown keys.
GalleryEntry gallery_by_key(const std::string& key);

// Key patterns accepted by gallery_by_key, for help/error text.
std::vector<std::string> gallery_key_patterns();

}  // namespace framepack
