#include "framepack/gallery.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "framepack/errors.hpp"
#include "framepack/random.hpp"

namespace framepack {

namespace {

void self_check(bool ok, const std::string& what) {
    if (!ok) throw ValidationError("gallery self-check failed: " + what);
}

// Cosine sets must match their algebraic values exactly up to rounding.
void check_cosine_set(const Frame& frame, const std::vector<double>& expected,
                      const std::string& key) {
    const GramProfile p = gram_profile(frame);
    self_check(p.cosine_set.size() == expected.size(),
               key + ": cosine set has " + std::to_string(p.cosine_set.size()) +
                   " values, expected " + std::to_string(expected.size()));
    for (std::size_t i = 0; i < expected.size(); ++i)
        self_check(std::abs(p.cosine_set[i] - expected[i]) <= 1e-9,
                   key + ": cosine set mismatch at position " + std::to_string(i));
}

}  // namespace

GalleryEntry gallery_mub_r4() {
    // Standard basis plus two rescaled Hadamard bases; any two rows from
    // different blocks meet at |<x,y>| = 1/2.
    const double h1[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    const double h2[4][4] = {{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, 1}};

    Eigen::MatrixXd cols(4, 12);
    cols.leftCols<4>() = Eigen::MatrixXd::Identity(4, 4);
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) {
            cols(i, 4 + j) = h1[j][i] / 2.0;
            cols(i, 8 + j) = h2[j][i] / 2.0;
        }

    for (int j = 0; j < 12; ++j)
        for (int l = j + 1; l < 12; ++l) {
            const double ip = std::abs(cols.col(j).dot(cols.col(l)));
            const bool same_basis = j / 4 == l / 4;
            self_check(std::abs(ip - (same_basis ? 0.0 : 0.5)) <= 1e-12,
                       "mub-r4 unbiasedness violated at pair (" + std::to_string(j) +
                           ", " + std::to_string(l) + ")");
        }

    GalleryEntry entry{"mub-r4", Frame::from_columns(std::move(cols)), {}};
    entry.expected.cosine_set = {0.0, 0.5};
    entry.expected.coherence = 0.5;
    entry.expected.level2_signed_cosines = {-0.125, 0.0};
    entry.expected.verdict = Verdict::CertifiedGrassmannian;
    entry.expected.verdict_level = 1;
    return entry;
}

GalleryEntry gallery_pentakis16() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Eigen::Vector3d> verts;

    // 20 dodecahedral vertices, circumradius sqrt(3).
    for (int s = 0; s < 8; ++s)
        verts.emplace_back(s & 1 ? -1 : 1, s & 2 ? -1 : 1, s & 4 ? -1 : 1);
    for (int s = 0; s < 4; ++s) {
        const double a = (s & 1 ? -1 : 1) / phi;
        const double b = (s & 2 ? -1 : 1) * phi;
        verts.emplace_back(0.0, a, b);
        verts.emplace_back(a, b, 0.0);
        verts.emplace_back(b, 0.0, a);
    }
    // 12 apexes over the pentagon centers, radially projected to the common
    // sphere. The dual of this dodecahedron orientation is the
    // odd-permutation icosahedron family.
    for (int s = 0; s < 4; ++s) {
        const double a = s & 1 ? -1 : 1;
        const double b = (s & 2 ? -1 : 1) * phi;
        verts.emplace_back(0.0, b, a);
        verts.emplace_back(b, a, 0.0);
        verts.emplace_back(a, 0.0, b);
    }
    self_check(verts.size() == 32, "pentakis16 must start from 32 vertices");

    Eigen::MatrixXd cols(3, 32);
    for (int j = 0; j < 32; ++j) cols.col(j) = verts[std::size_t(j)].normalized();
    Frame frame = antipodal_dedup(cols);
    self_check(frame.size() == 16, "pentakis16 dedup must leave 16 lines");

    // Distinct cosines of the 16 lines (6 five-fold and 10 three-fold axes):
    // sqrt((5-2*sqrt5)/15) and sqrt((5+2*sqrt5)/15) between apex and base
    // lines, 1/sqrt5 among apexes, 1/3 and sqrt5/3 among base lines.
    const double s5 = std::sqrt(5.0);
    std::vector<double> cosines = {std::sqrt((5.0 - 2.0 * s5) / 15.0), 1.0 / 3.0,
                                   1.0 / s5, s5 / 3.0,
                                   std::sqrt((5.0 + 2.0 * s5) / 15.0)};
    check_cosine_set(frame, cosines, "pentakis16");

    GalleryEntry entry{"pentakis16", std::move(frame), {}};
    entry.expected.cosine_set = cosines;
    entry.expected.coherence = cosines.back();
    entry.expected.level2_signed_cosines = {-0.2, -1.0 / 9.0, 0.0};
    entry.expected.verdict = Verdict::SaturatesBoundUnverified;
    entry.expected.verdict_level = 2;
    return entry;
}

GalleryEntry gallery_e8_120() {
    const double inv = 1.0 / std::sqrt(2.0);
    Eigen::MatrixXd roots(8, 240);
    int col = 0;

    // 112 integer roots: (+-1, +-1, 0^6) over lexicographic index pairs and
    // a fixed sign order.
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int s = 0; s < 4; ++s) {
                Eigen::VectorXd v = Eigen::VectorXd::Zero(8);
                v[i] = s & 1 ? -1.0 : 1.0;
                v[j] = s & 2 ? -1.0 : 1.0;
                roots.col(col++) = v * inv;
            }
    // 128 half-integer roots: (+-1/2)^8 with an even number of minus signs,
    // ascending sign mask.
    for (int mask = 0; mask < 256; ++mask) {
        if (std::popcount(unsigned(mask)) % 2 != 0) continue;
        Eigen::VectorXd v(8);
        for (int i = 0; i < 8; ++i) v[i] = (mask >> i) & 1 ? -0.5 : 0.5;
        roots.col(col++) = v * inv;
    }
    self_check(col == 240, "e8-120 must enumerate 112 + 128 = 240 roots");

    Frame frame = antipodal_dedup(roots);
    self_check(frame.size() == 120, "e8-120 dedup must leave 120 lines");
    check_cosine_set(frame, {0.0, 0.5}, "e8-120");

    GalleryEntry entry{"e8-120", std::move(frame), {}};
    entry.expected.cosine_set = {0.0, 0.5};
    entry.expected.coherence = 0.5;
    entry.expected.level2_signed_cosines = {-1.0 / 119.0};
    entry.expected.verdict = Verdict::CertifiedGrassmannian;
    entry.expected.verdict_level = 2;
    return entry;
}

GalleryEntry gallery_simplex(int m, bool lines) {
    if (m < 2) throw ValidationError("gallery_simplex: m must be >= 2");
    // v_j = a e_j + b 1 for j < m and v_m = -1/sqrt(m) 1 gives pairwise
    // inner products exactly -1/m.
    const double md = double(m);
    const double a = std::sqrt((md + 1.0) / md);
    const double b = (1.0 - std::sqrt(md + 1.0)) / (md * std::sqrt(md));
    Eigen::MatrixXd cols = Eigen::MatrixXd::Constant(m, m + 1, b);
    for (int j = 0; j < m; ++j) cols(j, j) += a;
    cols.col(m).setConstant(-1.0 / std::sqrt(md));

    Frame frame = lines ? antipodal_dedup(cols) : Frame::from_columns(std::move(cols));
    self_check(frame.size() == m + 1, "simplex must have m+1 vertices");

    GalleryEntry entry{"simplex-" + std::to_string(m), std::move(frame), {}};
    entry.expected.cosine_set = {1.0 / md};
    entry.expected.coherence = 1.0 / md;
    entry.expected.verdict = Verdict::CertifiedGrassmannian;
    entry.expected.verdict_level = 1;
    return entry;
}

GalleryEntry gallery_random(int m, int n, std::uint64_t seed) {
    if (m < 2 || n < 1) throw ValidationError("gallery_random: need m >= 2, n >= 1");
    SplitMix64 rng(seed);
    Eigen::MatrixXd cols(m, n);
    for (int j = 0; j < n; ++j) cols.col(j) = random_sphere_point(m, rng);
    std::ostringstream key;
    key << "random-" << m << "-" << n << "-" << seed;
    return GalleryEntry{key.str(), Frame::from_columns(std::move(cols)), {}};
}

GalleryEntry gallery_by_key(const std::string& key) {
    if (key == "mub-r4") return gallery_mub_r4();
    if (key == "pentakis16") return gallery_pentakis16();
    if (key == "e8-120") return gallery_e8_120();
    if (key.rfind("simplex-", 0) == 0) {
        std::istringstream in(key.substr(8));
        int m = 0;
        char trailing;
        if (in >> m && !(in >> trailing) && m >= 2) return gallery_simplex(m);
    }
    if (key.rfind("random-", 0) == 0) {
        std::string rest = key.substr(7);
        std::replace(rest.begin(), rest.end(), '-', ' ');
        std::istringstream in(rest);
        int m = 0, n = 0;
        std::uint64_t seed = 0;
        char trailing;
        if (in >> m >> n >> seed && !(in >> trailing) && m >= 2 && n >= 1)
            return gallery_random(m, n, seed);
    }
    std::string msg = "unknown gallery key '" + key + "'; available:";
    for (const auto& k : gallery_key_patterns()) msg += " " + k;
    throw ValidationError(msg);
}

std::vector<std::string> gallery_key_patterns() {
    return {"mub-r4", "pentakis16", "e8-120", "simplex-<m>", "random-<m>-<n>-<seed>"};
}

}  // namespace framepack
