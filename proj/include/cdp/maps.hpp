#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cdp/cdp_operator.hpp"

namespace cdp {

/// A linear map on M(n, C).
struct LinearMapOnMatrices {
    std::function<CMat(const CMat&)> action;
    std::string name;
    int dim = 0;

    CMat operator()(const CMat& x) const { return action(x); }
};

/// Which tensor leg carries the matrix-unit index in the Choi matrix.
/// MapOnSecond is sum_ij e_ij (x) Phi(e_ij); MapOnFirst is
/// sum_ij Phi(e_ij) (x) e_ij.  The two differ by a swap of tensor factors.
enum class ChoiLeg { MapOnFirst, MapOnSecond };

struct ChoiOperator {
    CMat matrix;
    ChoiLeg leg;
};

ChoiOperator choi(const LinearMapOnMatrices& map, ChoiLeg leg);

/// R(X) = tr(X) id - X.  Its Choi matrix equals rho[A, Sigma] with
/// A^0 = id - J (J all-ones) and A^k = id for k >= 1, for any canonical CDP
/// set containing the identity; both leg orders give the same matrix.
LinearMapOnMatrices reduction_map(int n);

/// U^sigma = ((-1)^j delta_{sigma(i) j}) for an involutive, fixed-point-free
/// pairing matching each even index with an odd one; unitary (orthogonal) and
/// antisymmetric.
struct AntisymUnitary {
    Permutation pairing;
    CMat matrix;
};

AntisymUnitary antisym_unitary(const Permutation& pairing);

/// B(X) = tr(X) id - X - U X^T U^+.
LinearMapOnMatrices breuer_hall_map(const AntisymUnitary& u);

/// The coefficient family of the Breuer-Hall Choi matrix over the regular
/// representation of (Z_2)^m (all non-identity elements are fixed-point-free
/// involutions; sigma_k(i) = k xor i).  With p the index of the pairing
/// permutation inside the set:
///   A^0 = id - J + m(sigma_p),   A^p = 0,
///   A^k = id + (-1)^k m(sigma_{sigma_p(k)})   for k != 0, p,
/// and build(family, Sigma) = sum_ij e_ij (x) B(e_ij) exactly.
CoefficientFamily breuer_hall_family(const CdpSet& sigma, int pairing_index);

/// An irreducibly covariant channel Phi = sum_alpha l_alpha Pi^alpha built
/// from a fixed two-dimensional unitary representation, with
/// Pi^alpha = (dim alpha / |G|) sum_g chi^alpha(g^{-1}) Ad_{U(g)}.
struct IrrepChannel {
    enum class Group { S3, Quaternion };

    Group group;
    std::vector<CMat> elements;                 // U(g)
    std::vector<int> inverse_index;             // position of g^{-1}
    std::vector<std::string> component_names;   // irreps entering Phi
    std::vector<CVec> component_characters;     // chi^alpha(g) per component
    std::vector<int> component_dims;
    std::vector<double> weights;                // l_alpha; weights[0] = 1

    CMat project(int comp, const CMat& x) const;  // Pi^alpha(X)
    CMat apply(const CMat& x) const;              // Phi(X)

    /// Characters of every irreducible representation of the group (the
    /// components above plus, for the quaternion group, the two-dimensional
    /// one); used for orthogonality checks.
    std::vector<CVec> full_character_table() const;

    /// l_sgn, l_lambda weighting the sign and two-dimensional components.
    static IrrepChannel s3(double l_sgn, double l_lambda);
    /// l_t1, l_t2, l_t3 weighting the three nontrivial one-dim components.
    static IrrepChannel quaternion(double l_t1, double l_t2, double l_t3);
};

struct IcqcChoi {
    ChoiOperator choi;          // 4x4, map-on-second leg order
    CoefficientFamily family;   // decomposition over S(2)
    CdpSet sigma;               // S(2) = {id, (01)}
};

IcqcChoi icqc_choi(const IrrepChannel& channel);

}  // namespace cdp
