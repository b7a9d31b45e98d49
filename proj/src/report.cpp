#include "framepack/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "framepack/errors.hpp"

namespace framepack {

namespace {

EmbeddingSummary summarize(const Frame& frame, int level, const AnalysisOptions& opt) {
    const EmbeddedGram eg = embedded_gram(frame, level, GramMethod::ClosedForm,
                                          opt.mem_guard_bytes, opt.cluster_tol);
    EmbeddingSummary s;
    s.level = level;
    s.dimension = embedding_dimension(level, frame.dim());
    s.signed_cosine_set = eg.signed_cosine_set;
    s.simplex_deviation = simplex_deviation(eg);
    s.max_offdiag = eg.max_offdiag;
    s.rank = eg.rank;
    if (level == 2) {
        try {
            const EmbeddedGram tg = embedded_gram(frame, 2, GramMethod::Tensor,
                                                  opt.mem_guard_bytes, opt.cluster_tol);
            s.tensor_checked = true;
            s.tensor_max_diff = (tg.matrix - eg.matrix).cwiseAbs().maxCoeff();
        } catch (const GuardError&) {
            s.tensor_checked = false;  // closed form stands alone; noted in output
        }
    }
    return s;
}

}  // namespace

AnalysisReport analyze_frame(const Frame& frame, const std::string& source,
                             const AnalysisOptions& opt) {
    AnalysisReport r;
    r.source = source;
    r.m = frame.dim();
    r.n = frame.size();
    r.profile = gram_profile(frame, opt.cluster_tol, opt.tight_tol);
    if (frame.size() >= 2) r.bounds = bound_report(frame.size(), frame.dim());
    r.level1 = summarize(frame, 1, opt);
    r.level2 = summarize(frame, 2, opt);
    if (r.profile.spans) {
        r.cert_level1 = certify_level1(frame, opt.certify_tol);
        r.cert_level2 = certify_level2(frame, opt.certify_tol);
    } else {
        r.certification_note = "certification skipped: frame does not span R^" +
                               std::to_string(frame.dim());
    }
    return r;
}

nlohmann::json certificate_to_json(const Certificate& cert) {
    nlohmann::json conditions = nlohmann::json::array();
    for (const auto& c : cert.conditions)
        conditions.push_back({{"name", c.name},
                              {"value", c.value},
                              {"threshold", c.threshold},
                              {"pass", c.pass}});
    nlohmann::json j{{"level", cert.level},
                     {"route", to_string(cert.route)},
                     {"verdict", to_string(cert.verdict)},
                     {"coherence", cert.coherence},
                     {"conditions", conditions}};
    if (cert.certified_constant) j["certified_constant"] = *cert.certified_constant;
    return j;
}

namespace {

nlohmann::json summary_to_json(const EmbeddingSummary& s) {
    nlohmann::json j{{"level", s.level},
                     {"dimension", s.dimension},
                     {"signed_cosine_set", s.signed_cosine_set},
                     {"simplex_deviation", s.simplex_deviation},
                     {"max_offdiag", s.max_offdiag},
                     {"rank", s.rank},
                     {"tensor_checked", s.tensor_checked}};
    if (s.tensor_checked) j["tensor_max_diff"] = s.tensor_max_diff;
    return j;
}

}  // namespace

nlohmann::json report_to_json(const AnalysisReport& r) {
    nlohmann::json bounds{{"welch", r.bounds.welch},
                          {"welch_vacuous", r.bounds.welch_vacuous},
                          {"orthoplex", r.bounds.orthoplex},
                          {"orthoplex_applicable", r.bounds.orthoplex_applicable},
                          {"rankin_simplex_target", r.bounds.rankin_simplex_target},
                          {"second_simplex_applicable", r.bounds.second_simplex_applicable},
                          {"second_orthant_applicable", r.bounds.second_orthant_applicable},
                          {"best_applicable", r.bounds.best_applicable}};
    bounds["second_simplex_bound"] = r.bounds.second_simplex_bound
        ? nlohmann::json(*r.bounds.second_simplex_bound) : nlohmann::json(nullptr);
    bounds["second_orthant_bound"] = r.bounds.second_orthant_bound
        ? nlohmann::json(*r.bounds.second_orthant_bound) : nlohmann::json(nullptr);

    nlohmann::json profile{{"coherence", r.profile.coherence},
                           {"cosine_set", r.profile.cosine_set},
                           {"angularity", r.profile.angularity},
                           {"tight", r.profile.tightness.has_value()},
                           {"spans", r.profile.spans},
                           {"single_vector", r.profile.single_vector}};
    if (r.profile.tightness) profile["tightness"] = *r.profile.tightness;

    nlohmann::json j{{"format_version", r.format_version},
                     {"frame", {{"source", r.source}, {"m", r.m}, {"n", r.n}}},
                     {"gram_profile", profile},
                     {"bounds", bounds},
                     {"embedding_level1", summary_to_json(r.level1)},
                     {"embedding_level2", summary_to_json(r.level2)}};
    if (r.cert_level1) j["certificate_level1"] = certificate_to_json(*r.cert_level1);
    if (r.cert_level2) j["certificate_level2"] = certificate_to_json(*r.cert_level2);
    if (!r.certification_note.empty()) j["certification_note"] = r.certification_note;
    return j;
}

namespace {

void print_values(std::ostream& out, const std::vector<double>& values) {
    out << "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ", ";
        out << values[i];
    }
    out << "}";
}

void print_summary(std::ostream& out, const EmbeddingSummary& s) {
    out << "level-" << s.level << " embedding (D_" << s.level << " = " << s.dimension
        << ")\n";
    out << "  signed cosine set   ";
    print_values(out, s.signed_cosine_set);
    out << "\n  max off-diagonal    " << s.max_offdiag
        << "\n  simplex deviation   " << s.simplex_deviation
        << "\n  numerical rank      " << s.rank << "\n";
    if (s.level == 2) {
        if (s.tensor_checked)
            out << "  tensor-path check   max diff " << s.tensor_max_diff << "\n";
        else
            out << "  tensor-path check   skipped (memory guard)\n";
    }
}

}  // namespace

std::string certificate_to_text(const Certificate& cert) {
    std::ostringstream out;
    out.precision(12);
    out << "level " << cert.level << " certificate: " << to_string(cert.verdict)
        << " (route " << to_string(cert.route) << ")\n";
    out << "  coherence " << cert.coherence;
    if (cert.certified_constant)
        out << "  certified constant " << *cert.certified_constant;
    out << "\n";
    for (const auto& c : cert.conditions)
        out << "  [" << (c.pass ? "pass" : "fail") << "] " << c.name << ": value "
            << c.value << " vs threshold " << c.threshold << "\n";
    return out.str();
}

std::string report_to_text(const AnalysisReport& r) {
    std::ostringstream out;
    out.precision(12);
    out << "frame " << r.source << ": n = " << r.n << " vectors in R^" << r.m << "\n";
    out << "  coherence           " << r.profile.coherence;
    if (r.profile.single_vector) out << "  (single vector)";
    out << "\n  cosine set          ";
    print_values(out, r.profile.cosine_set);
    out << "\n  angularity          " << r.profile.angularity << "\n";
    if (r.profile.tightness)
        out << "  tight with a = " << *r.profile.tightness << "\n";
    else
        out << "  not tight\n";
    out << "  spans R^" << r.m << "            " << (r.profile.spans ? "yes" : "no")
        << "\n";

    if (r.bounds.n >= 2) {
        out << "bounds (n = " << r.bounds.n << ", m = " << r.bounds.m << ")\n";
        out << "  welch               " << r.bounds.welch
            << (r.bounds.welch_vacuous ? "  (vacuous: n <= m)" : "") << "\n";
        out << "  orthoplex           " << r.bounds.orthoplex
            << (r.bounds.orthoplex_applicable ? "  (applicable)" : "  (not applicable)")
            << "\n";
        if (r.bounds.second_simplex_bound)
            out << "  second simplex      " << *r.bounds.second_simplex_bound << "\n";
        if (r.bounds.second_orthant_bound)
            out << "  second orthant      " << *r.bounds.second_orthant_bound << "\n";
        out << "  best applicable     " << r.bounds.best_applicable << "\n";
    }

    print_summary(out, r.level1);
    print_summary(out, r.level2);

    if (r.cert_level1) out << certificate_to_text(*r.cert_level1);
    if (r.cert_level2) out << certificate_to_text(*r.cert_level2);
    if (!r.certification_note.empty()) out << r.certification_note << "\n";
    return out.str();
}

}  // namespace framepack
