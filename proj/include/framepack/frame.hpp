#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "framepack/tolerances.hpp"

namespace framepack {

// n unit-norm vectors in R^m, stored as the columns of an m x n matrix.
// Construction validates m >= 2, n >= 1 and unit norms (within kUnitTol,
// after optional renormalization). Spanning is not required here; it is
// reported by gram_profile and enforced only by the certifier.
class Frame {
public:
    // Columns of `cols` are the vectors. With `renormalize`, each column is
    // divided by its norm; zero columns are rejected either way.
    static Frame from_columns(Eigen::MatrixXd cols, bool renormalize = false);

    int dim() const { return int(cols_.rows()); }    // m
    int size() const { return int(cols_.cols()); }   // n
    const Eigen::MatrixXd& columns() const { return cols_; }
    Eigen::VectorXd vector(int j) const { return cols_.col(j); }

private:
    explicit Frame(Eigen::MatrixXd cols) : cols_(std::move(cols)) {}
    Eigen::MatrixXd cols_;
};

// First-order diagnostics of a unit-norm vector set.
struct GramProfile {
    Eigen::MatrixXd gram;             // n x n, gram(j,l) = <f_j, f_l>
    double coherence = 0.0;           // max off-diagonal |entry|
    std::vector<double> cosine_set;   // clustered distinct |entries|, ascending
    int angularity = 0;               // cosine_set.size()
    std::optional<double> tightness;  // a = n/m when sum f f^T = a I holds
    bool spans = false;               // vectors span R^m
    bool single_vector = false;       // n == 1: coherence 0 by convention
};

// Frame file format: '#' comment lines, then "m n", then n rows of m floats.
Frame load_frame(std::istream& in, bool renormalize = false);
Frame load_frame(const std::string& text, bool renormalize = false);
Frame load_frame_file(const std::string& path, bool renormalize = false);

void write_frame(std::ostream& out, const Frame& frame,
                 const std::vector<std::string>& comments = {});

// Same format for a raw coordinate matrix (columns are vectors); used for
// embedded coordinates whose rows are unit only up to reconstruction error.
void write_vectors(std::ostream& out, const Eigen::MatrixXd& cols,
                   const std::vector<std::string>& comments = {});

GramProfile gram_profile(const Frame& frame, double cluster_tol = kClusterTol,
                         double tight_tol = kTightTol);

// One representative per line {v, -v}; representatives are sign-normalized so
// the first coordinate with |x_i| > dedup_tol is positive; first-occurrence
// order; exact duplicates collapse.
Frame antipodal_dedup(const Eigen::MatrixXd& vectors, double dedup_tol = kDedupTol);

// Single-linkage clustering: sorted values split where the gap between
// neighbors exceeds gap_tol; each cluster reported by its mean.
std::vector<double> cluster_values(std::vector<double> values, double gap_tol);

}  // namespace framepack
