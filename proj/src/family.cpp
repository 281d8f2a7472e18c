#include "cdp/family.hpp"

#include <cmath>
#include <string>

#include "cdp/error.hpp"

namespace cdp {

CoefficientFamily::CoefficientFamily(std::vector<CMat> m) : mats(std::move(m)) {
    const int n = static_cast<int>(mats.size());
    for (const auto& a : mats) {
        if (a.rows() != n || a.cols() != n)
            throw Error("dimension-error", "coefficient family needs n matrices of size n x n, n = " +
                                               std::to_string(n));
        if (!a.allFinite()) throw Error("numeric-error", "non-finite coefficient entry");
    }
}

CoefficientFamily CoefficientFamily::zero(int n) {
    return CoefficientFamily(std::vector<CMat>(n, CMat::Zero(n, n)));
}

bool CoefficientFamily::is_hermitian(double tol) const {
    for (const auto& a : mats)
        if (!cdp::is_hermitian(a, tol)) return false;
    return true;
}

bool CoefficientFamily::is_psd(double tol) const {
    for (const auto& a : mats)
        if (!cdp::is_psd(a, tol)) return false;
    return true;
}

Complex CoefficientFamily::total_trace() const {
    Complex t = 0;
    for (const auto& a : mats) t += a.trace();
    return t;
}

CoefficientFamily CoefficientFamily::normalized() const {
    const Complex t = total_trace();
    if (std::abs(t) < 1e-300) throw Error("numeric-error", "cannot normalize a traceless family");
    std::vector<CMat> out;
    out.reserve(mats.size());
    for (const auto& a : mats) out.push_back(a / t);
    return CoefficientFamily(std::move(out));
}

}  // namespace cdp
