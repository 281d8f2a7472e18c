#pragma once

#include <vector>

#include "cdp/linalg.hpp"

namespace cdp {

/// The free data of a CDP matrix: n complex n x n coefficient matrices A^k,
/// k aligned with the canonical enumeration of the generating set.
struct CoefficientFamily {
    std::vector<CMat> mats;

    CoefficientFamily() = default;
    explicit CoefficientFamily(std::vector<CMat> m);

    static CoefficientFamily zero(int n);

    int n() const noexcept { return static_cast<int>(mats.size()); }
    const CMat& operator[](int k) const { return mats.at(k); }
    CMat& operator[](int k) { return mats.at(k); }

    bool is_hermitian(double tol = 1e-12) const;
    bool is_psd(double tol) const;

    /// tr(rho) = sum_k tr(A^k).
    Complex total_trace() const;

    /// Family scaled to unit total trace.
    CoefficientFamily normalized() const;
};

}  // namespace cdp
