#include "cdp/separability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cdp/error.hpp"

namespace cdp {

namespace {

int side_of(const CMat& m) {
    if (m.rows() != m.cols()) throw Error("non-square-structure", "matrix is not square");
    const int n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(m.rows()))));
    if (static_cast<Eigen::Index>(n) * n != m.rows())
        throw Error("non-square-structure", "dimension is not a perfect square");
    return n;
}

void require_hermitian(const CdpOperator& op) {
    if (!op.is_hermitian())
        throw Error("unsupported", "operation requires a Hermitian coefficient family");
}

void require_abelian(const CdpOperator& op) {
    if (!op.sigma().is_abelian())
        throw Error("theorem-inapplicable",
                    "closed form requires an abelian generating set; use the dense route");
}

}  // namespace

CMat partial_transpose_dense(const CMat& m) {
    const int n = side_of(m);
    CMat out(m.rows(), m.cols());
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < n; ++p)
            for (int j = 0; j < n; ++j)
                for (int q = 0; q < n; ++q) out(i * n + p, j * n + q) = m(i * n + q, j * n + p);
    return out;
}

std::vector<double> PtSpectrum::block_eigenvalues(int k) const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n) * n);
    for (int p = 0; p < n; ++p) out.push_back(diagonal.at(k)(p));
    for (double m : moduli.at(k)) {
        out.push_back(m);
        out.push_back(-m);
    }
    return out;
}

double PtSpectrum::block_min(int k) const {
    double lo = diagonal.at(k).minCoeff();
    for (double m : moduli.at(k)) lo = std::min(lo, -m);
    return lo;
}

double PtSpectrum::min() const {
    double lo = block_min(0);
    for (int k = 1; k < n; ++k) lo = std::min(lo, block_min(k));
    return lo;
}

PtSpectrum pt_spectrum(const CdpOperator& op) {
    require_hermitian(op);
    const int n = op.n();
    PtSpectrum sp;
    sp.n = n;
    for (int k = 0; k < n; ++k) {
        const CMat& a = op.family()[k];
        RVec diag(n);
        for (int p = 0; p < n; ++p) diag(p) = a(p, p).real();
        std::vector<double> mods;
        mods.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) mods.push_back(std::abs(a(i, j)));
        sp.diagonal.push_back(std::move(diag));
        sp.moduli.push_back(std::move(mods));
    }
    return sp;
}

PtAsCdp pt_as_cdp(const CdpOperator& op) {
    require_abelian(op);
    const int n = op.n();
    const CdpSet& sigma = op.sigma();
    const Permutation xi = sigma.xi();

    std::vector<Permutation> shifted;
    shifted.reserve(n);
    for (int k = 0; k < n; ++k) shifted.push_back(sigma[k].compose(xi));

    std::vector<Permutation> inv;
    inv.reserve(n);
    for (int i = 0; i < n; ++i) inv.push_back(sigma[i].inverse());

    std::vector<CMat> mats(n, CMat::Zero(n, n));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) mats[k](i, j) = op.family()[inv[i](inv[j](k))](i, j);

    return PtAsCdp{CoefficientFamily(std::move(mats)), CdpSet::verify(std::move(shifted))};
}

bool is_ppt(const CdpOperator& op, double tol) {
    require_hermitian(op);
    if (op.sigma().is_abelian()) {
        const PtAsCdp pt = pt_as_cdp(op);
        for (const auto& a : pt.family.mats)
            if (min_eigenvalue(a) < -tol) return false;
        return true;
    }
    return min_eigenvalue(partial_transpose_dense(op.dense())) >= -tol;
}

CMat realign_dense(const CMat& m) {
    const int n = side_of(m);
    CMat out(m.rows(), m.cols());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) out(a * n + b, c * n + d) = m(b * n + d, a * n + c);
    return out;
}

Realignment realign(const CdpOperator& op, double tol) {
    require_abelian(op);
    const int n = op.n();
    const CdpSet& sigma = op.sigma();

    Realignment result;
    const Complex t = op.family().total_trace();
    const bool renorm = std::abs(t - Complex(1.0, 0.0)) > 1e-12;
    const CoefficientFamily fam = renorm ? op.family().normalized() : op.family();
    result.normalized = renorm;

    std::vector<Permutation> inv;
    inv.reserve(n);
    for (int i = 0; i < n; ++i) inv.push_back(sigma[i].inverse());

    std::vector<CMat> mats(n, CMat::Zero(n, n));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) mats[k](i, j) = fam[inv[i](j)](sigma[k](i), i);

    result.family = CoefficientFamily(std::move(mats));
    result.sum = 0.0;
    for (const auto& a : result.family.mats) result.sum += trace_norm(a);
    result.pass = result.sum <= 1.0 + tol;
    return result;
}

std::pair<CMat, CMat> reduced_states(const CdpOperator& op) {
    const int n = op.n();
    CMat r1 = CMat::Zero(n, n);
    CMat r2 = CMat::Zero(n, n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            r1(i, i) += op.family()[k](i, i);
            const int p = op.sigma()[k](i);
            r2(p, p) += op.family()[k](i, i);
        }
    return {std::move(r1), std::move(r2)};
}

bool majorised(std::vector<double> a, std::vector<double> b, double tol) {
    const std::size_t len = std::max(a.size(), b.size());
    a.resize(len, 0.0);
    b.resize(len, 0.0);
    std::sort(a.begin(), a.end(), std::greater<double>());
    std::sort(b.begin(), b.end(), std::greater<double>());
    double sa = 0.0, sb = 0.0;
    for (double x : a) sa += x;
    for (double x : b) sb += x;
    if (std::abs(sa - sb) > tol)
        throw Error("not-comparable-totals", "totals differ: " + std::to_string(sa) + " vs " +
                                                 std::to_string(sb));
    double pa = 0.0, pb = 0.0;
    for (std::size_t i = 0; i + 1 < len; ++i) {
        pa += a[i];
        pb += b[i];
        if (pa > pb + tol) return false;
    }
    return true;
}

MajorisationVerdict majorisation_criterion(const CdpOperator& op, double tol) {
    require_hermitian(op);
    MajorisationVerdict verdict;

    const Complex t = op.family().total_trace();
    if (t.real() <= 0.0)
        throw Error("unsupported", "majorisation criterion requires a positive-trace operator");
    const bool renorm = std::abs(t - Complex(1.0, 0.0)) > 1e-12;
    verdict.normalized = renorm;
    const double scale = renorm ? 1.0 / t.real() : 1.0;

    std::vector<double> lam_rho = op.spectrum().all_real();
    for (double& x : lam_rho) x *= scale;

    auto [r1, r2] = reduced_states(op);
    std::vector<double> lam1, lam2;
    for (int i = 0; i < op.n(); ++i) {
        lam1.push_back(r1(i, i).real() * scale);
        lam2.push_back(r2(i, i).real() * scale);
    }
    verdict.vs_rho1 = majorised(lam_rho, lam1, tol);
    verdict.vs_rho2 = majorised(lam_rho, lam2, tol);
    return verdict;
}

SeparabilityReport analyze(const CdpOperator& op, double tol) {
    SeparabilityReport rep;
    rep.n = op.n();
    rep.hermitian = op.is_hermitian();
    if (!rep.hermitian)
        throw Error("unsupported", "separability analysis requires a Hermitian family");
    rep.psd = op.is_psd(tol);
    rep.abelian = op.sigma().is_abelian();

    const Complex t = op.family().total_trace();
    rep.normalized = std::abs(t - Complex(1.0, 0.0)) > 1e-12;
    const CoefficientFamily fam = rep.normalized ? op.family().normalized() : op.family();
    const CdpOperator unit(fam, op.sigma());

    const PtSpectrum pts = pt_spectrum(unit);
    for (int k = 0; k < unit.n(); ++k) rep.pt_block_min.push_back(pts.block_min(k));

    if (rep.abelian) {
        PtAsCdp pt = pt_as_cdp(unit);
        double lo = 0.0;
        bool first = true;
        for (const auto& a : pt.family.mats) {
            const double m = min_eigenvalue(a);
            lo = first ? m : std::min(lo, m);
            first = false;
        }
        rep.pt_min_eigenvalue = lo;
        rep.ppt = lo >= -tol;
        rep.pt_family = std::move(pt.family);
        rep.pt_sigma = std::move(pt.sigma);

        Realignment rl = realign(unit, tol);
        rep.realignment_sum = rl.sum;
        rep.realignment_pass = rl.pass;
        rep.realignment_closed_form = true;
    } else {
        rep.pt_min_eigenvalue = min_eigenvalue(partial_transpose_dense(unit.dense()));
        rep.ppt = rep.pt_min_eigenvalue >= -tol;
        rep.realignment_sum = trace_norm(realign_dense(unit.dense()));
        rep.realignment_pass = rep.realignment_sum <= 1.0 + tol;
        rep.realignment_closed_form = false;
    }

    rep.majorisation = majorisation_criterion(unit, tol);
    return rep;
}

}  // namespace cdp
