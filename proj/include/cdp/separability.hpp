#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cdp/cdp_operator.hpp"

namespace cdp {

/// Transpose on the second tensor factor: entry ((i,p),(j,q)) -> ((i,q),(j,p)).
CMat partial_transpose_dense(const CMat& m);

/// Closed-form spectra of the partially transposed blocks.  For a Hermitian
/// A^k the matrix (id (x) T) rho[A^k, sigma_k] has the n diagonal entries
/// a^k_pp as eigenvalues plus the pair +-|a^k_ij| for every i < j; together
/// these are its full n^2-point spectrum (zeros included).
struct PtSpectrum {
    int n = 0;
    std::vector<RVec> diagonal;               // per k: a^k_pp
    std::vector<std::vector<double>> moduli;  // per k: |a^k_ij| for i < j

    /// The n^2 eigenvalues of block k's partial transpose.
    std::vector<double> block_eigenvalues(int k) const;
    double block_min(int k) const;
    double min() const;  // over all blocks
};

PtSpectrum pt_spectrum(const CdpOperator& op);

/// For abelian sets the partial transpose is again a CDP matrix:
/// rho^{T2} = rho[A~, Sigma'] with Sigma' = {sigma_k o xi} and
/// a~^k_ij = a^{sigma_i^{-1} sigma_j^{-1}(k)}_ij.  Both sides are coordinate
/// shuffles of the same values, so the dense realizations match exactly.
struct PtAsCdp {
    CoefficientFamily family;
    CdpSet sigma;
};
PtAsCdp pt_as_cdp(const CdpOperator& op);

/// PPT test.  Abelian sets check the transposed family blockwise; other sets
/// fall back to diagonalizing the dense partial transpose.
bool is_ppt(const CdpOperator& op, double tol);

/// Dense realignment, frozen convention R(rho)_{(a,b),(c,d)} = rho_{(b,d),(a,c)}.
/// This is the arrangement under which a CDP matrix realigns to a CDP matrix
/// over the same set; it differs from the textbook CCNR arrangement only by a
/// fixed relabeling of rows and columns, so trace norms agree.
CMat realign_dense(const CMat& m);

struct Realignment {
    CoefficientFamily family;  // realigned family over the same set
    double sum = 0.0;          // sum_k ||A~^k||_tr
    bool pass = false;         // sum <= 1 + tol
    bool normalized = false;   // input was rescaled to unit trace first
};

/// Abelian sets only (theorem-inapplicable otherwise); the operator is
/// normalized to unit trace before the criterion is evaluated.
Realignment realign(const CdpOperator& op, double tol = 1e-9);

/// (id (x) tr) rho and (tr (x) id) rho; both are diagonal for CDP matrices.
std::pair<CMat, CMat> reduced_states(const CdpOperator& op);

/// a is majorised by b: every descending partial sum of a is bounded by the
/// corresponding sum of b, with equal totals (within tol).  Vectors are
/// sorted internally and the shorter is zero-padded.  Throws
/// not-comparable-totals when the totals differ beyond tol.
bool majorised(std::vector<double> a, std::vector<double> b, double tol = 1e-9);

struct MajorisationVerdict {
    bool vs_rho1 = false;
    bool vs_rho2 = false;
    bool normalized = false;
};

/// Necessary condition for separability: lambda(rho) majorised by the spectra
/// of both reduced states.  Uses the block spectrum (no dense eigensolve) and
/// the diagonal reduced states, zero-padded to n^2.
MajorisationVerdict majorisation_criterion(const CdpOperator& op, double tol = 1e-9);

struct SeparabilityReport {
    int n = 0;
    bool hermitian = false;
    bool psd = false;
    bool normalized = false;
    bool abelian = false;
    bool ppt = false;
    double pt_min_eigenvalue = 0.0;
    std::vector<double> pt_block_min;             // per-block PSD diagnostics
    std::optional<CoefficientFamily> pt_family;   // abelian only
    std::optional<CdpSet> pt_sigma;               // abelian only
    double realignment_sum = 0.0;
    bool realignment_pass = false;
    bool realignment_closed_form = false;         // family route vs dense fallback
    MajorisationVerdict majorisation;
};

/// Run all three necessary criteria.  A false verdict certifies entanglement;
/// the report never claims separability.
SeparabilityReport analyze(const CdpOperator& op, double tol = 1e-9);

}  // namespace cdp
