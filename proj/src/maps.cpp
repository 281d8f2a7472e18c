#include "cdp/maps.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "cdp/error.hpp"

namespace cdp {

namespace {

CMat unit(int i, int j, int n) {
    CMat m = CMat::Zero(n, n);
    m(i, j) = 1.0;
    return m;
}

std::vector<int> find_inverses(const std::vector<CMat>& elements) {
    const int g = static_cast<int>(elements.size());
    std::vector<int> inv(g, -1);
    const CMat id = CMat::Identity(elements.front().rows(), elements.front().cols());
    for (int a = 0; a < g; ++a)
        for (int b = 0; b < g; ++b)
            if ((elements[a] * elements[b] - id).cwiseAbs().maxCoeff() < 1e-12) {
                inv[a] = b;
                break;
            }
    for (int a = 0; a < g; ++a)
        if (inv[a] < 0) throw Error("not-a-group", "element without inverse in representation");
    return inv;
}

}  // namespace

ChoiOperator choi(const LinearMapOnMatrices& map, ChoiLeg leg) {
    const int n = map.dim;
    CMat j = CMat::Zero(n * n, n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const CMat img = map(unit(a, b, n));
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    if (leg == ChoiLeg::MapOnSecond)
                        j(a * n + r, b * n + c) += img(r, c);
                    else
                        j(r * n + a, c * n + b) += img(r, c);
                }
        }
    return ChoiOperator{std::move(j), leg};
}

LinearMapOnMatrices reduction_map(int n) {
    if (n < 2) throw Error("invalid-degree", "reduction map needs n >= 2");
    return LinearMapOnMatrices{
        [n](const CMat& x) -> CMat {
            if (x.rows() != n || x.cols() != n) throw Error("dimension-error", "reduction map input");
            return x.trace() * CMat::Identity(n, n) - x;
        },
        "reduction", n};
}

AntisymUnitary antisym_unitary(const Permutation& pairing) {
    const int n = pairing.degree();
    if (n % 2 != 0) throw Error("invalid-degree", "antisymmetric unitary needs even dimension");
    for (int i = 0; i < n; ++i) {
        const int j = pairing(i);
        if (j == i) throw Error("invalid-pairing", "pairing fixes " + std::to_string(i));
        if (pairing(j) != i) throw Error("invalid-pairing", "pairing is not an involution");
        if (i % 2 == j % 2)
            throw Error("invalid-pairing", "pairing joins same-parity indices " + std::to_string(i) +
                                               "," + std::to_string(j));
    }
    CMat u = CMat::Zero(n, n);
    for (int i = 0; i < n; ++i) u(i, pairing(i)) = (pairing(i) % 2 == 0) ? 1.0 : -1.0;
    // invariants: orthogonal and antisymmetric
    if ((u * u.adjoint() - CMat::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-12 ||
        (u.transpose() + u).cwiseAbs().maxCoeff() > 1e-12)
        throw Error("invalid-pairing", "constructed matrix violates its invariants");
    return AntisymUnitary{pairing, std::move(u)};
}

LinearMapOnMatrices breuer_hall_map(const AntisymUnitary& u) {
    const int n = u.pairing.degree();
    const CMat mat = u.matrix;
    return LinearMapOnMatrices{
        [n, mat](const CMat& x) -> CMat {
            if (x.rows() != n || x.cols() != n) throw Error("dimension-error", "breuer-hall input");
            return x.trace() * CMat::Identity(n, n) - x - mat * x.transpose() * mat.adjoint();
        },
        "breuer-hall", n};
}

CoefficientFamily breuer_hall_family(const CdpSet& sigma, int pairing_index) {
    const int n = sigma.n();
    if (pairing_index <= 0 || pairing_index >= n)
        throw Error("out-of-range", "pairing index must name a non-identity element");
    if (!sigma.is_canonical() || !sigma.is_group() || !sigma.is_abelian())
        throw Error("unsupported", "family formula needs the regular representation of (Z_2)^m");
    for (int k = 1; k < n; ++k) {
        const Permutation& p = sigma[k];
        if (p.fixed_points() != 0 || !p.compose(p).is_identity())
            throw Error("unsupported",
                        "every non-identity element must be a fixed-point-free involution");
    }
    if ((n & (n - 1)) != 0)
        throw Error("unsupported", "degree must be a power of two");
    antisym_unitary(sigma[pairing_index]);  // validates the even/odd pairing shape

    const int p = pairing_index;
    const CMat id = CMat::Identity(n, n);
    const CMat ones = CMat::Constant(n, n, 1.0);
    std::vector<CMat> mats(n);
    mats[0] = id - ones + sigma[p].cmatrix();
    for (int k = 1; k < n; ++k) {
        if (k == p) {
            mats[k] = CMat::Zero(n, n);
            continue;
        }
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        mats[k] = id + sign * sigma[sigma[p](k)].cmatrix();
    }
    return CoefficientFamily(std::move(mats));
}

CMat IrrepChannel::project(int comp, const CMat& x) const {
    const int g = static_cast<int>(elements.size());
    CMat out = CMat::Zero(x.rows(), x.cols());
    for (int i = 0; i < g; ++i)
        out += component_characters[comp](inverse_index[i]) * (elements[i] * x * elements[i].adjoint());
    return (static_cast<double>(component_dims[comp]) / g) * out;
}

CMat IrrepChannel::apply(const CMat& x) const {
    CMat out = CMat::Zero(x.rows(), x.cols());
    for (std::size_t a = 0; a < weights.size(); ++a) out += weights[a] * project(static_cast<int>(a), x);
    return out;
}

IrrepChannel IrrepChannel::s3(double l_sgn, double l_lambda) {
    const Complex w = std::exp(Complex(0.0, 2.0 * M_PI / 3.0));
    CMat r(2, 2), s(2, 2);
    r << w, 0.0, 0.0, w * w;
    s << 0.0, 1.0, 1.0, 0.0;

    IrrepChannel ch;
    ch.group = Group::S3;
    ch.elements = {CMat::Identity(2, 2), r, r * r, s, r * s, r * r * s};
    ch.inverse_index = find_inverses(ch.elements);
    ch.component_names = {"id", "sgn", "lambda"};
    ch.component_dims = {1, 1, 2};
    ch.weights = {1.0, l_sgn, l_lambda};

    CVec chi_id(6), chi_sgn(6), chi_lam(6);
    chi_id << 1, 1, 1, 1, 1, 1;
    chi_sgn << 1, 1, 1, -1, -1, -1;
    for (int i = 0; i < 6; ++i) chi_lam(i) = ch.elements[i].trace();
    ch.component_characters = {chi_id, chi_sgn, chi_lam};
    return ch;
}

IrrepChannel IrrepChannel::quaternion(double l_t1, double l_t2, double l_t3) {
    const Complex im(0.0, 1.0);
    CMat qe = CMat::Identity(2, 2);
    CMat q1(2, 2), q2(2, 2), q3(2, 2);
    q1 << im, 0.0, 0.0, -im;
    q2 << 0.0, 1.0, -1.0, 0.0;
    q3 << 0.0, im, im, 0.0;

    IrrepChannel ch;
    ch.group = Group::Quaternion;
    ch.elements = {qe, -qe, q1, q2, q3, -q1, -q2, -q3};
    ch.inverse_index = find_inverses(ch.elements);
    ch.component_names = {"id", "t1", "t2", "t3"};
    ch.component_dims = {1, 1, 1, 1};
    ch.weights = {1.0, l_t1, l_t2, l_t3};

    CVec chi_id(8), chi_t1(8), chi_t2(8), chi_t3(8);
    chi_id << 1, 1, 1, 1, 1, 1, 1, 1;
    chi_t1 << 1, 1, -1, 1, -1, -1, 1, -1;
    chi_t2 << 1, 1, 1, -1, -1, 1, -1, -1;
    chi_t3 << 1, 1, -1, -1, 1, -1, -1, 1;
    ch.component_characters = {chi_id, chi_t1, chi_t2, chi_t3};
    return ch;
}

std::vector<CVec> IrrepChannel::full_character_table() const {
    std::vector<CVec> table = component_characters;
    if (group == Group::Quaternion) {
        CVec chi_t4(8);
        chi_t4 << 2, -2, 0, 0, 0, 0, 0, 0;
        table.push_back(chi_t4);
    }
    return table;
}

IcqcChoi icqc_choi(const IrrepChannel& channel) {
    LinearMapOnMatrices map{[&channel](const CMat& x) { return channel.apply(x); }, "icqc", 2};
    ChoiOperator j = choi(map, ChoiLeg::MapOnSecond);

    std::vector<Permutation> s2;
    s2.push_back(Permutation::identity(2));
    s2.push_back(Permutation(std::vector<int>{1, 0}));
    CdpSet sigma = CdpSet::verify(std::move(s2));
    CoefficientFamily family = decompose(j.matrix, sigma, 1e-12);
    return IcqcChoi{std::move(j), std::move(family), std::move(sigma)};
}

}  // namespace cdp
