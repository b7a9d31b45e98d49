#include "framepack/certify.hpp"

#include <cmath>

#include "framepack/embeddings.hpp"
#include "framepack/errors.hpp"

namespace framepack {

namespace {

double frame_coherence(const Frame& frame, bool* spans) {
    const GramProfile p = gram_profile(frame);
    *spans = p.spans;
    return p.coherence;
}

void require_spanning(const Frame& frame, bool spans, const char* who) {
    if (!spans)
        throw ValidationError(std::string(who) +
                              ": frame does not span R^" + std::to_string(frame.dim()));
}

}  // namespace

Certificate certify_level1(const Frame& frame, double tol) {
    if (tol <= 0.0) throw ValidationError("certify_level1: tolerance must be positive");
    Certificate cert;
    cert.level = 1;
    bool spans = false;
    cert.coherence = frame_coherence(frame, &spans);
    require_spanning(frame, spans, "certify_level1");

    const int n = frame.size();
    const long long d1 = embedding_dimension(1, frame.dim());
    const EmbeddedGram eg = embedded_gram(frame, 1);

    const double dev = simplex_deviation(eg);
    const CertCondition simplex_dev{"simplex-deviation", dev, tol, dev <= tol};
    const CertCondition orthant_count{"orthant-cardinality", double(n), double(d1 + 1),
                                      n > d1 + 1};
    const CertCondition orthant_inner{"max-embedded-inner", eg.max_offdiag, tol,
                                      eg.max_offdiag <= tol};

    if (simplex_dev.pass) {
        cert.route = CertRoute::Simplex;
        cert.verdict = Verdict::CertifiedGrassmannian;
        cert.conditions = {simplex_dev};
    } else if (orthant_count.pass && orthant_inner.pass) {
        cert.route = CertRoute::Orthant;
        cert.verdict = Verdict::CertifiedGrassmannian;
        cert.conditions = {orthant_count, orthant_inner};
    } else {
        cert.route = CertRoute::None;
        cert.verdict = Verdict::Undetermined;
        cert.conditions = {simplex_dev, orthant_count, orthant_inner};
    }
    if (cert.verdict == Verdict::CertifiedGrassmannian)
        cert.certified_constant = cert.coherence;
    return cert;
}

Certificate certify_level2(const Frame& frame, double tol) {
    if (tol <= 0.0) throw ValidationError("certify_level2: tolerance must be positive");
    Certificate cert;
    cert.level = 2;
    bool spans = false;
    cert.coherence = frame_coherence(frame, &spans);
    require_spanning(frame, spans, "certify_level2");

    const int n = frame.size();
    const int m = frame.dim();
    const long long d1 = embedding_dimension(1, m);
    const long long d2 = embedding_dimension(2, m);
    const long long mm1_sq = (long long)(m - 1) * (m - 1);
    const EmbeddedGram eg = embedded_gram(frame, 2);

    // Hypothesis checks are exact in integers; the recorded values are the
    // fractions the theorem states.
    const bool simplex_hyp = (long long)(n - d1) * mm1_sq >= d1 * (long long)(n - 1);
    const CertCondition simplex_cond{"simplex-applicability",
                                     double(n - d1) / double(n - 1),
                                     double(d1) / double(mm1_sq), simplex_hyp};
    const double dev = simplex_deviation(eg);
    const CertCondition simplex_dev{"simplex-deviation", dev, tol, dev <= tol};

    const CertCondition orthant_count{"orthant-cardinality", double(n), double(d2 + 1),
                                      n > d2 + 1};
    const CertCondition orthant_dim{"dimension-condition", double(mm1_sq), double(d1),
                                    mm1_sq >= d1};
    const CertCondition orthant_inner{"max-embedded-inner", eg.max_offdiag, tol,
                                      eg.max_offdiag <= tol};

    const bool simplex_config = simplex_dev.pass;
    const bool orthant_config = orthant_count.pass && orthant_inner.pass;

    if (simplex_hyp && simplex_config) {
        cert.route = CertRoute::Simplex;
        cert.verdict = Verdict::CertifiedGrassmannian;
        cert.conditions = {simplex_cond, simplex_dev};
    } else if (orthant_config && orthant_dim.pass) {
        cert.route = CertRoute::Orthant;
        cert.verdict = Verdict::CertifiedGrassmannian;
        cert.conditions = {orthant_count, orthant_dim, orthant_inner};
    } else if (simplex_config || orthant_config) {
        // The embedded image attains a Rankin-optimal configuration, but the
        // theorem hypotheses do not cover it.
        cert.route = simplex_config ? CertRoute::Simplex : CertRoute::Orthant;
        cert.verdict = Verdict::SaturatesBoundUnverified;
        cert.conditions = simplex_config
            ? std::vector<CertCondition>{simplex_cond, simplex_dev}
            : std::vector<CertCondition>{orthant_count, orthant_dim, orthant_inner};
    } else {
        cert.route = CertRoute::None;
        cert.verdict = Verdict::Undetermined;
        cert.conditions = {simplex_cond, simplex_dev, orthant_count, orthant_dim,
                           orthant_inner};
    }
    if (cert.verdict == Verdict::CertifiedGrassmannian)
        cert.certified_constant = cert.coherence;
    return cert;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::CertifiedGrassmannian: return "CertifiedGrassmannian";
        case Verdict::SaturatesBoundUnverified: return "SaturatesBoundUnverified";
        case Verdict::Undetermined: return "Undetermined";
    }
    return "?";
}

const char* to_string(CertRoute r) {
    switch (r) {
        case CertRoute::Simplex: return "simplex";
        case CertRoute::Orthant: return "orthant";
        case CertRoute::None: return "none";
    }
    return "?";
}

}  // namespace framepack
