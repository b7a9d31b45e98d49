#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>

#include "framepack/bounds.hpp"
#include "framepack/certify.hpp"
#include "framepack/embeddings.hpp"
#include "framepack/frame.hpp"

namespace framepack {

struct AnalysisOptions {
    double certify_tol = kCertifyTol;
    double cluster_tol = kClusterTol;
    double tight_tol = kTightTol;
    std::size_t mem_guard_bytes = kDefaultMemGuard;
};

struct EmbeddingSummary {
    int level = 0;
    long long dimension = 0;  // D_level(m)
    std::vector<double> signed_cosine_set;
    double simplex_deviation = 0.0;
    double max_offdiag = 0.0;
    int rank = 0;
    bool tensor_checked = false;    // tensor path ran under the memory guard
    double tensor_max_diff = 0.0;   // entrywise gap closed-form vs tensor
};

// Everything the analyze command surfaces. format_version pins the JSON
// schema.
struct AnalysisReport {
    int format_version = 1;
    std::string source;
    int m = 0;
    int n = 0;
    GramProfile profile;
    BoundReport bounds;
    EmbeddingSummary level1;
    EmbeddingSummary level2;
    std::optional<Certificate> cert_level1;  // absent when the frame does not span
    std::optional<Certificate> cert_level2;
    std::string certification_note;
};

AnalysisReport analyze_frame(const Frame& frame, const std::string& source,
                             const AnalysisOptions& options = {});

nlohmann::json report_to_json(const AnalysisReport& report);
nlohmann::json certificate_to_json(const Certificate& cert);
std::string report_to_text(const AnalysisReport& report);
std::string certificate_to_text(const Certificate& cert);

}  // namespace framepack
