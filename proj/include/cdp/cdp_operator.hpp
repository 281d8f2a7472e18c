#pragma once

#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "cdp/cdp_set.hpp"
#include "cdp/family.hpp"
#include "cdp/linalg.hpp"

namespace cdp {

struct Norms {
    double hs;  // (sum_k ||A^k||_HS^2)^(1/2)
    double tr;  // sum_k ||A^k||_tr
};

/// Per-block eigensystem.  Block k of the operator is supported on
/// H_k = span{e_l (x) e_{sigma_k(l)}}; its eigenvalues are exactly the
/// eigenvalues of A^k, with eigenvectors w^k(q) = sum_j x_j e_j (x) e_{sigma_k(j)}.
struct BlockSpectrum {
    bool hermitian;
    std::vector<CVec> values;          // per k, length n
    std::vector<CMat> vectors;         // per k, n^2 x n embedded eigenvectors

    /// All n^2 eigenvalues as reals; requires a Hermitian family.
    std::vector<double> all_real() const;
    std::vector<Complex> all() const;
};

/// The bipartite operator rho[A, Sigma] = sum_k sum_ij a^k_ij e_ij (x)
/// e_{sigma_k(i) sigma_k(j)} in M(n^2, C), a direct sum of blocks carried by
/// the orthogonal subspaces H_k.  Tensor coordinates pair row-major:
/// (i, p) -> i*n + p.  The dense realization is cached lazily; all other
/// queries work at the family level.
class CdpOperator {
public:
    CdpOperator(CoefficientFamily family, CdpSet sigma);

    CdpOperator(const CdpOperator& other);
    CdpOperator& operator=(const CdpOperator& other);

    int n() const noexcept { return sigma_.n(); }
    const CoefficientFamily& family() const noexcept { return family_; }
    const CdpSet& sigma() const noexcept { return sigma_; }

    const CMat& dense() const;

    /// B_ij = sum_k a^k_ij e_{sigma_k(i) sigma_k(j)}, the (i,j) block of the
    /// dense realization.
    CMat block(int i, int j) const;

    BlockSpectrum spectrum() const;
    Norms norms() const;

    bool is_hermitian(double tol = 1e-12) const;
    bool is_psd(double tol) const;

    /// rho[A', Sigma'] with Sigma' = {delta o sigma_i o eta} and
    /// A'^k = m(eta^{-1}) A^k m(eta), re-enumerated canonically.  A local
    /// transformation: the spectrum is preserved.
    CdpOperator conjugate_transformed(const Permutation& delta, const Permutation& eta) const;

private:
    CoefficientFamily family_;
    CdpSet sigma_;
    mutable std::mutex dense_mutex_;
    mutable std::shared_ptr<const CMat> dense_;
};

/// The n basis pairs (l, sigma_k(l)) spanning H_k.
std::vector<std::pair<int, int>> subspace_basis(const CdpSet& sigma, int k);

/// Inverse of the dense realization: read the coefficients off the sparsity
/// pattern of sigma and fail on the first entry outside it.  Entries with
/// modulus <= tol count as structural zeros.
CoefficientFamily decompose(const CMat& dense, const CdpSet& sigma, double tol = 0.0);

}  // namespace cdp
