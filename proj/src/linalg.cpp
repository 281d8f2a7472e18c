#include "cdp/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "cdp/error.hpp"

namespace cdp {

bool is_hermitian(const CMat& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_psd(const CMat& m, double tol) {
    if (!is_hermitian(m, tol)) return false;
    return min_eigenvalue(m) >= -tol;
}

double hs_norm(const CMat& m) { return m.norm(); }

double trace_norm(const CMat& m) {
    Eigen::JacobiSVD<CMat> svd(m);
    return svd.singularValues().sum();
}

RVec hermitian_eigenvalues(const CMat& m) {
    Eigen::SelfAdjointEigenSolver<CMat> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw Error("numeric-error", "hermitian eigensolver failed");
    return es.eigenvalues();
}

double min_eigenvalue(const CMat& m) {
    return hermitian_eigenvalues(m).minCoeff();
}

CVec eigenvalues(const CMat& m) {
    Eigen::ComplexEigenSolver<CMat> es(m, false);
    if (es.info() != Eigen::Success) throw Error("numeric-error", "eigensolver failed");
    return es.eigenvalues();
}

CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

double max_abs_diff(const CMat& a, const CMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error("dimension-error", "max_abs_diff: shape mismatch");
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(const CMat& a, const CMat& b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

std::vector<double> sorted_descending(std::vector<double> v) {
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v;
}

bool same_real_multiset(std::vector<double> a, std::vector<double> b, double tol) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

}  // namespace cdp
