#include "cdp/cdp_operator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cdp/error.hpp"

namespace cdp {

std::vector<double> BlockSpectrum::all_real() const {
    if (!hermitian) throw Error("unsupported", "real spectrum requires a Hermitian family");
    std::vector<double> out;
    for (const auto& v : values)
        for (Eigen::Index q = 0; q < v.size(); ++q) out.push_back(v(q).real());
    return out;
}

std::vector<Complex> BlockSpectrum::all() const {
    std::vector<Complex> out;
    for (const auto& v : values)
        for (Eigen::Index q = 0; q < v.size(); ++q) out.push_back(v(q));
    return out;
}

CdpOperator::CdpOperator(CoefficientFamily family, CdpSet sigma)
    : family_(std::move(family)), sigma_(std::move(sigma)) {
    if (family_.n() != sigma_.n())
        throw Error("dimension-error", "family size " + std::to_string(family_.n()) +
                                           " does not match set degree " + std::to_string(sigma_.n()));
    if (!sigma_.is_canonical())
        throw Error("not-canonical", "operator requires a canonically enumerated CDP set");
}

CdpOperator::CdpOperator(const CdpOperator& other)
    : family_(other.family_), sigma_(other.sigma_) {
    std::lock_guard<std::mutex> lock(other.dense_mutex_);
    dense_ = other.dense_;
}

CdpOperator& CdpOperator::operator=(const CdpOperator& other) {
    if (this == &other) return *this;
    std::shared_ptr<const CMat> cache;
    {
        std::lock_guard<std::mutex> lock(other.dense_mutex_);
        cache = other.dense_;
    }
    family_ = other.family_;
    sigma_ = other.sigma_;
    std::lock_guard<std::mutex> lock(dense_mutex_);
    dense_ = std::move(cache);
    return *this;
}

const CMat& CdpOperator::dense() const {
    std::lock_guard<std::mutex> lock(dense_mutex_);
    if (!dense_) {
        const int n = this->n();
        auto m = std::make_shared<CMat>(CMat::Zero(n * n, n * n));
        std::vector<char> touched(static_cast<std::size_t>(n * n) * n * n, 0);
        for (int k = 0; k < n; ++k) {
            const auto& s = sigma_[k].images();
            const CMat& a = family_[k];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const int r = i * n + s[i];
                    const int c = j * n + s[j];
                    // complete difference guarantees each coordinate is
                    // written by at most one (k, i, j)
                    char& seen = touched[static_cast<std::size_t>(r) * n * n + c];
                    if (seen) throw Error("not-cdp", "support overlap during dense realization");
                    seen = 1;
                    (*m)(r, c) = a(i, j);
                }
        }
        dense_ = std::move(m);
    }
    return *dense_;
}

CMat CdpOperator::block(int i, int j) const {
    const int n = this->n();
    if (i < 0 || i >= n || j < 0 || j >= n) throw Error("out-of-range", "block index");
    CMat b = CMat::Zero(n, n);
    for (int k = 0; k < n; ++k) b(sigma_[k](i), sigma_[k](j)) = family_[k](i, j);
    return b;
}

BlockSpectrum CdpOperator::spectrum() const {
    const int n = this->n();
    BlockSpectrum sp;
    sp.hermitian = family_.is_hermitian();
    sp.values.reserve(n);
    sp.vectors.reserve(n);
    for (int k = 0; k < n; ++k) {
        CVec vals(n);
        CMat vecs(n, n);
        if (sp.hermitian) {
            Eigen::SelfAdjointEigenSolver<CMat> es(family_[k]);
            if (es.info() != Eigen::Success) throw Error("numeric-error", "block eigensolver failed");
            vals = es.eigenvalues().cast<Complex>();
            vecs = es.eigenvectors();
        } else {
            Eigen::ComplexEigenSolver<CMat> es(family_[k], true);
            if (es.info() != Eigen::Success) throw Error("numeric-error", "block eigensolver failed");
            vals = es.eigenvalues();
            vecs = es.eigenvectors();
        }
        CMat embedded = CMat::Zero(n * n, n);
        const auto& s = sigma_[k].images();
        for (int q = 0; q < n; ++q)
            for (int j = 0; j < n; ++j) embedded(j * n + s[j], q) = vecs(j, q);
        sp.values.push_back(std::move(vals));
        sp.vectors.push_back(std::move(embedded));
    }
    return sp;
}

Norms CdpOperator::norms() const {
    double hs2 = 0.0, tr = 0.0;
    for (const auto& a : family_.mats) {
        hs2 += hs_norm(a) * hs_norm(a);
        tr += trace_norm(a);
    }
    return Norms{std::sqrt(hs2), tr};
}

bool CdpOperator::is_hermitian(double tol) const { return family_.is_hermitian(tol); }

bool CdpOperator::is_psd(double tol) const { return family_.is_psd(tol); }

CdpOperator CdpOperator::conjugate_transformed(const Permutation& delta, const Permutation& eta) const {
    const int n = this->n();
    if (delta.degree() != n || eta.degree() != n)
        throw Error("dimension-error", "conjugate_transformed: degree mismatch");
    const CMat me = eta.cmatrix();
    const CMat meInv = eta.inverse().cmatrix();
    std::vector<std::pair<Permutation, CMat>> pairs;
    pairs.reserve(n);
    for (int k = 0; k < n; ++k)
        pairs.emplace_back(delta.compose(sigma_[k]).compose(eta), meInv * family_[k] * me);
    // re-enumerate canonically, keeping each block with its permutation
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first(0) < b.first(0); });
    std::vector<Permutation> perms;
    std::vector<CMat> mats;
    for (auto& [p, a] : pairs) {
        perms.push_back(std::move(p));
        mats.push_back(std::move(a));
    }
    return CdpOperator(CoefficientFamily(std::move(mats)), CdpSet::verify(std::move(perms)));
}

std::vector<std::pair<int, int>> subspace_basis(const CdpSet& sigma, int k) {
    if (k < 0 || k >= sigma.n()) throw Error("out-of-range", "subspace index");
    std::vector<std::pair<int, int>> basis;
    basis.reserve(sigma.n());
    for (int l = 0; l < sigma.n(); ++l) basis.emplace_back(l, sigma[k](l));
    return basis;
}

CoefficientFamily decompose(const CMat& dense, const CdpSet& sigma, double tol) {
    const int n = sigma.n();
    if (dense.rows() != n * n || dense.cols() != n * n)
        throw Error("dimension-error", "decompose: dense matrix must be n^2 x n^2");
    if (!sigma.is_canonical()) throw Error("not-canonical", "decompose requires canonical order");

    // row (i, p) determines the block: the unique k with sigma_k(i) = p
    std::vector<std::vector<int>> block_of(n, std::vector<int>(n, -1));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) block_of[i][sigma[k](i)] = k;

    std::vector<CMat> mats(n, CMat::Zero(n, n));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) mats[k](i, j) = dense(i * n + sigma[k](i), j * n + sigma[k](j));

    for (int r = 0; r < n * n; ++r)
        for (int c = 0; c < n * n; ++c) {
            const int i = r / n, p = r % n, j = c / n, q = c % n;
            const int k = block_of[i][p];
            if (sigma[k](j) == q) continue;  // on-pattern, already captured
            if (std::abs(dense(r, c)) > tol)
                throw Error("not-cdp-structured", "nonzero entry outside the support pattern at (" +
                                                      std::to_string(r) + "," + std::to_string(c) + ")");
        }
    return CoefficientFamily(std::move(mats));
}

}  // namespace cdp
