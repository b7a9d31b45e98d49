#include "framepack/frame.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "framepack/errors.hpp"

namespace framepack {

Frame Frame::from_columns(Eigen::MatrixXd cols, bool renormalize) {
    if (cols.rows() < 2)
        throw ValidationError("frame dimension must satisfy m >= 2, got m=" +
                              std::to_string(cols.rows()));
    if (cols.cols() < 1) throw ValidationError("frame must contain at least one vector");
    for (Eigen::Index j = 0; j < cols.cols(); ++j) {
        const double norm = cols.col(j).norm();
        if (norm < kUnitTol)
            throw ValidationError("zero vector at index " + std::to_string(j));
        if (renormalize) {
            cols.col(j) /= norm;
        } else if (std::abs(norm - 1.0) > kUnitTol) {
            throw ValidationError("vector " + std::to_string(j) + " has norm " +
                                  std::to_string(norm) + ", expected 1");
        }
    }
    return Frame(std::move(cols));
}

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;  // blank
}

}  // namespace

Frame load_frame(std::istream& in, bool renormalize) {
    std::string line;
    int line_no = 0;
    long m = -1, n = -1;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        std::istringstream head(line);
        if (!(head >> m >> n))
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected header 'm n'");
        std::string extra;
        if (head >> extra)
            throw ParseError("line " + std::to_string(line_no) +
                             ": trailing token '" + extra + "' after header");
        break;
    }
    if (m < 0) throw ParseError("empty input: missing 'm n' header");
    if (m < 2 || n < 1)
        throw ParseError("header requires m >= 2 and n >= 1, got m=" +
                         std::to_string(m) + " n=" + std::to_string(n));

    Eigen::MatrixXd cols(m, n);
    long row = 0;
    while (row < n && std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        std::istringstream ls(line);
        for (long i = 0; i < m; ++i) {
            double x;
            if (!(ls >> x))
                throw ParseError("line " + std::to_string(line_no) + ": row " +
                                 std::to_string(row) + " has fewer than " +
                                 std::to_string(m) + " entries");
            cols(i, row) = x;
        }
        std::string extra;
        if (ls >> extra)
            throw ParseError("line " + std::to_string(line_no) + ": row " +
                             std::to_string(row) + " has more than " +
                             std::to_string(m) + " entries");
        ++row;
    }
    if (row < n)
        throw ParseError("expected " + std::to_string(n) + " vector rows, got " +
                         std::to_string(row));
    return Frame::from_columns(std::move(cols), renormalize);
}

Frame load_frame(const std::string& text, bool renormalize) {
    std::istringstream in(text);
    return load_frame(in, renormalize);
}

Frame load_frame_file(const std::string& path, bool renormalize) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open frame file: " + path);
    return load_frame(in, renormalize);
}

void write_vectors(std::ostream& out, const Eigen::MatrixXd& cols,
                   const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
    out << cols.rows() << " " << cols.cols() << "\n";
    out.precision(17);
    for (Eigen::Index j = 0; j < cols.cols(); ++j) {
        for (Eigen::Index i = 0; i < cols.rows(); ++i) {
            if (i) out << " ";
            out << cols(i, j);
        }
        out << "\n";
    }
}

void write_frame(std::ostream& out, const Frame& frame,
                 const std::vector<std::string>& comments) {
    write_vectors(out, frame.columns(), comments);
}

std::vector<double> cluster_values(std::vector<double> values, double gap_tol) {
    if (values.empty()) return {};
    std::sort(values.begin(), values.end());
    std::vector<double> out;
    double sum = values.front();
    int count = 1;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] - values[i - 1] > gap_tol) {
            out.push_back(sum / count);
            sum = 0.0;
            count = 0;
        }
        sum += values[i];
        ++count;
    }
    out.push_back(sum / count);
    return out;
}

GramProfile gram_profile(const Frame& frame, double cluster_tol, double tight_tol) {
    const int m = frame.dim();
    const int n = frame.size();
    GramProfile p;
    p.gram = frame.columns().transpose() * frame.columns();

    if (n == 1) {
        p.single_vector = true;
        p.coherence = 0.0;
    } else {
        std::vector<double> offdiag;
        offdiag.reserve(std::size_t(n) * (n - 1) / 2);
        for (int j = 0; j < n; ++j)
            for (int l = j + 1; l < n; ++l) offdiag.push_back(std::abs(p.gram(j, l)));
        p.cosine_set = cluster_values(std::move(offdiag), cluster_tol);
        p.coherence = p.cosine_set.empty() ? 0.0 : p.cosine_set.back();
    }
    p.angularity = int(p.cosine_set.size());

    // Tightness: sum f f^T must equal (n/m) I in the max-entry norm. The
    // trace forces a = n/m for unit vectors, so only that value is tested.
    Eigen::MatrixXd s = frame.columns() * frame.columns().transpose();
    const double a = double(n) / double(m);
    const double dev = (s - a * Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff();
    if (dev <= tight_tol) p.tightness = a;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s, Eigen::EigenvaluesOnly);
    const double lmax = es.eigenvalues().maxCoeff();
    p.spans = es.eigenvalues().minCoeff() > kSpanTol * std::max(1.0, lmax);
    return p;
}

Frame antipodal_dedup(const Eigen::MatrixXd& vectors, double dedup_tol) {
    const Eigen::Index m = vectors.rows();
    const Eigen::Index n = vectors.cols();
    if (n < 1) throw ValidationError("antipodal_dedup: empty input");

    std::vector<Eigen::VectorXd> kept;
    for (Eigen::Index j = 0; j < n; ++j) {
        Eigen::VectorXd v = vectors.col(j);
        const double norm = v.norm();
        if (std::abs(norm - 1.0) > kUnitTol)
            throw ValidationError("antipodal_dedup: vector " + std::to_string(j) +
                                  " is not unit norm");
        for (Eigen::Index i = 0; i < m; ++i) {
            if (std::abs(v[i]) > dedup_tol) {
                if (v[i] < 0.0) v = -v;
                break;
            }
        }
        bool duplicate = false;
        for (const auto& u : kept) {
            if ((u - v).cwiseAbs().maxCoeff() <= dedup_tol) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) kept.push_back(std::move(v));
    }

    Eigen::MatrixXd out(m, Eigen::Index(kept.size()));
    for (std::size_t j = 0; j < kept.size(); ++j) out.col(Eigen::Index(j)) = kept[j];
    return Frame::from_columns(std::move(out));
}

}  // namespace framepack
