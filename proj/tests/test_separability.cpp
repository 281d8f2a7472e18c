#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cdp/error.hpp"
#include "cdp/separability.hpp"
#include "golden_tables.hpp"
#include "test_support.hpp"

using namespace cdp;

namespace {

CdpSet named(const std::vector<std::string>& cycles, int n) {
    std::vector<Permutation> perms;
    for (const auto& c : cycles) perms.push_back(Permutation::from_cycles(c, n, 1));
    return CdpSet::verify(std::move(perms));
}

CoefficientFamily max_entangled(int n) {
    CoefficientFamily f = CoefficientFamily::zero(n);
    f[0] = CMat::Constant(n, n, 1.0 / n);
    return f;
}

CoefficientFamily max_mixed(int n) {
    CoefficientFamily f = CoefficientFamily::zero(n);
    for (int k = 0; k < n; ++k) f[k] = CMat::Identity(n, n) / (n * n);
    return f;
}

}  // namespace

TEST_CASE("partial transpose dense") {
    CHECK(max_abs_diff(partial_transpose_dense(CMat::Identity(9, 9)), CMat::Identity(9, 9)) == 0.0);

    std::mt19937_64 rng(21);
    const CMat m = cdp::test::random_complex(9, rng);
    CHECK(max_abs_diff(partial_transpose_dense(partial_transpose_dense(m)), m) == 0.0);

    SUBCASE("swap maps to the unnormalized maximally entangled projector") {
        CMat swap = CMat::Zero(4, 4);
        swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
        CMat proj = CMat::Zero(4, 4);  // 2 * P_+ = sum_ij e_ij (x) e_ij
        proj(0, 0) = proj(0, 3) = proj(3, 0) = proj(3, 3) = 1.0;
        CHECK(max_abs_diff(partial_transpose_dense(swap), proj) == 0.0);
    }

    CHECK_THROWS_AS(partial_transpose_dense(CMat::Zero(6, 6)), Error);
    CHECK_THROWS_AS(partial_transpose_dense(CMat::Zero(4, 9)), Error);
}

TEST_CASE("pt spectrum closed form") {
    std::mt19937_64 rng(22);

    SUBCASE("diagonal blocks stay diagonal") {
        CoefficientFamily fam = CoefficientFamily::zero(3);
        for (int k = 0; k < 3; ++k) fam[k] = CMat::Identity(3, 3) * (k + 1.0);
        const PtSpectrum sp = pt_spectrum(CdpOperator(fam, CdpSet::cyclic(3)));
        for (int k = 0; k < 3; ++k) {
            for (int p = 0; p < 3; ++p) CHECK(sp.diagonal[k](p) == k + 1.0);
            for (double m : sp.moduli[k]) CHECK(m == 0.0);
            CHECK(sp.block_min(k) >= -0.0);  // block PT stays PSD
        }
    }

    SUBCASE("an off-diagonal entry makes the block NPT") {
        CoefficientFamily fam = CoefficientFamily::zero(3);
        fam[1] = CMat::Zero(3, 3);
        fam[1](0, 2) = Complex(0.3, -0.4);
        fam[1](2, 0) = Complex(0.3, 0.4);
        const PtSpectrum sp = pt_spectrum(CdpOperator(fam, CdpSet::cyclic(3)));
        CHECK(sp.block_min(1) == doctest::Approx(-0.5));
    }

    SUBCASE("closed form equals the dense eigensolver per block") {
        for (int n : {3, 4, 5}) {
            const CdpSet sigma = n == 4 ? named(goldens::kV4, 4) : CdpSet::cyclic(n);
            const CoefficientFamily fam = cdp::test::random_hermitian_family(n, rng);
            const PtSpectrum sp = pt_spectrum(CdpOperator(fam, sigma));
            for (int k = 0; k < n; ++k) {
                CoefficientFamily single = CoefficientFamily::zero(n);
                single[k] = fam[k];
                const CMat pt = partial_transpose_dense(CdpOperator(single, sigma).dense());
                std::vector<double> dense;
                const RVec ev = hermitian_eigenvalues(pt);
                for (int i = 0; i < ev.size(); ++i) dense.push_back(ev(i));
                CHECK(same_real_multiset(dense, sp.block_eigenvalues(k), 1e-10));
            }
        }
    }

    SUBCASE("PT eigenvalues depend only on moduli of the off-diagonals") {
        const int n = 4;
        const CdpSet c4 = CdpSet::cyclic(4);
        CoefficientFamily fam = cdp::test::random_hermitian_family(n, rng);
        const PtSpectrum before = pt_spectrum(CdpOperator(fam, c4));
        // rotate every off-diagonal phase
        std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    const Complex ph = std::exp(Complex(0.0, angle(rng)));
                    fam[k](i, j) *= ph;
                    fam[k](j, i) = std::conj(fam[k](i, j));
                }
        const PtSpectrum after = pt_spectrum(CdpOperator(fam, c4));
        for (int k = 0; k < n; ++k)
            CHECK(same_real_multiset(before.block_eigenvalues(k), after.block_eigenvalues(k),
                                     1e-12));
    }

    SUBCASE("requires a Hermitian family") {
        std::vector<CMat> mats;
        for (int k = 0; k < 3; ++k) mats.push_back(cdp::test::random_complex(3, rng));
        CHECK_THROWS_AS(pt_spectrum(CdpOperator(CoefficientFamily(mats), CdpSet::cyclic(3))),
                        Error);
    }
}

TEST_CASE("partial transpose as a CDP matrix") {
    std::mt19937_64 rng(23);

    SUBCASE("exact dense equality for cyclic sets") {
        for (int n : {3, 4, 5, 6}) {
            const CdpSet cn = CdpSet::cyclic(n);
            const CoefficientFamily fam = cdp::test::random_hermitian_family(n, rng);
            const CdpOperator op(fam, cn);
            const PtAsCdp pt = pt_as_cdp(op);
            CHECK(max_abs_diff(CdpOperator(pt.family, pt.sigma).dense(),
                               partial_transpose_dense(op.dense())) == 0.0);
            // Sigma' = Sigma xi as a set
            CHECK(pt.sigma.same_set(cn.transformed(Permutation::identity(n), cn.xi())));
        }
    }

    SUBCASE("Klein set keeps its group and shuffles indices by sigma_i sigma_j") {
        const CdpSet v4 = named(goldens::kV4, 4);
        const CoefficientFamily fam = cdp::test::random_hermitian_family(4, rng);
        const PtAsCdp pt = pt_as_cdp(CdpOperator(fam, v4));
        CHECK(pt.sigma.same_set(v4));
        for (int k = 0; k < 4; ++k)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    CHECK(pt.family[k](i, j) == fam[v4[i](v4[j](k))](i, j));
    }

    SUBCASE("diagonal families stay diagonal with shuffled block indices") {
        const int n = 4;
        const CdpSet v4 = named(goldens::kV4, 4);
        CoefficientFamily fam = CoefficientFamily::zero(n);
        std::normal_distribution<double> dist(0.0, 1.0);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) fam[k](i, i) = std::abs(dist(rng));
        const CdpOperator op(fam, v4);
        const PtAsCdp pt = pt_as_cdp(op);
        CHECK(max_abs_diff(CdpOperator(pt.family, pt.sigma).dense(),
                           partial_transpose_dense(op.dense())) == 0.0);
        CHECK(is_ppt(op, 1e-12));
    }

    SUBCASE("non-abelian sets are rejected") {
        const CdpSet rs3 = named(goldens::kRegularS3, 6);
        const CoefficientFamily fam = cdp::test::random_hermitian_family(6, rng);
        CHECK_THROWS_WITH_AS(pt_as_cdp(CdpOperator(fam, rs3)),
                             "closed form requires an abelian generating set; use the dense route",
                             Error);
    }
}

TEST_CASE("is_ppt") {
    std::mt19937_64 rng(24);

    SUBCASE("diagonal nonnegative families are PPT") {
        CoefficientFamily fam = CoefficientFamily::zero(4);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int k = 0; k < 4; ++k)
            for (int i = 0; i < 4; ++i) fam[k](i, i) = u(rng);
        CHECK(is_ppt(CdpOperator(fam, CdpSet::cyclic(4)), 1e-12));
    }

    SUBCASE("any non-diagonal single block is NPT") {
        CoefficientFamily fam = CoefficientFamily::zero(3);
        fam[1] = CMat::Identity(3, 3);
        fam[1](0, 1) = fam[1](1, 0) = 0.25;
        CHECK_FALSE(is_ppt(CdpOperator(fam, CdpSet::cyclic(3)), 1e-9));
    }

    SUBCASE("closed-form verdict equals the dense verdict") {
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 3 + static_cast<int>(rng() % 3);
            const CdpSet cn = CdpSet::cyclic(n);
            const CoefficientFamily fam = cdp::test::random_state_family(n, rng);
            const CdpOperator op(fam, cn);
            const bool closed = is_ppt(op, 1e-9);
            const bool dense =
                min_eigenvalue(partial_transpose_dense(op.dense())) >= -1e-9;
            CHECK(closed == dense);
        }
    }

    SUBCASE("non-abelian sets use the dense route") {
        const CdpSet rs3 = named(goldens::kRegularS3, 6);
        CoefficientFamily fam = CoefficientFamily::zero(6);
        for (int k = 0; k < 6; ++k) fam[k] = CMat::Identity(6, 6) / 36.0;
        CHECK(is_ppt(CdpOperator(fam, rs3), 1e-12));
    }
}

TEST_CASE("realignment") {
    std::mt19937_64 rng(25);

    SUBCASE("dense equality under the frozen convention") {
        for (int n : {2, 3, 4, 5}) {
            const CdpSet sigma = n == 4 ? named(goldens::kV4, 4) : CdpSet::cyclic(n);
            const CoefficientFamily fam = cdp::test::random_state_family(n, rng);
            const CdpOperator op(fam, sigma);
            const Realignment rl = realign(op);
            CHECK(max_abs_diff(CdpOperator(rl.family, sigma).dense(),
                               realign_dense(op.dense())) == 0.0);
        }
    }

    SUBCASE("frozen convention has the same trace norm as the textbook arrangement") {
        const int n = 3;
        const CoefficientFamily fam = cdp::test::random_state_family(n, rng);
        const CMat d = CdpOperator(fam, CdpSet::cyclic(n)).dense();
        CMat std_arrangement(n * n, n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q)
                        std_arrangement(i * n + j, p * n + q) = d(i * n + p, j * n + q);
        CHECK(trace_norm(realign_dense(d)) ==
              doctest::Approx(trace_norm(std_arrangement)).epsilon(1e-12));
    }

    SUBCASE("maximally mixed passes with sum 1/n") {
        for (int n = 2; n <= 5; ++n) {
            const Realignment rl = realign(CdpOperator(max_mixed(n), CdpSet::cyclic(n)));
            CHECK(rl.sum == doctest::Approx(1.0 / n).epsilon(1e-12));
            CHECK(rl.pass);
        }
    }

    SUBCASE("maximally entangled fails with sum n") {
        for (int n = 2; n <= 5; ++n) {
            const Realignment rl = realign(CdpOperator(max_entangled(n), CdpSet::cyclic(n)));
            CHECK(rl.sum == doctest::Approx(static_cast<double>(n)).epsilon(1e-12));
            CHECK_FALSE(rl.pass);
        }
    }

    SUBCASE("separable diagonal states pass") {
        for (int trial = 0; trial < 25; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 4);
            CoefficientFamily fam = CoefficientFamily::zero(n);
            std::uniform_real_distribution<double> u(0.0, 1.0);
            for (int k = 0; k < n; ++k)
                for (int i = 0; i < n; ++i) fam[k](i, i) = u(rng);
            const Realignment rl = realign(CdpOperator(fam.normalized(), CdpSet::cyclic(n)));
            CHECK(rl.sum <= 1.0 + 1e-9);
        }
    }

    SUBCASE("input is normalized automatically") {
        const CoefficientFamily fam = cdp::test::random_state_family(3, rng);
        CoefficientFamily scaled = fam;
        for (auto& m : scaled.mats) m *= 7.0;
        const Realignment a = realign(CdpOperator(fam, CdpSet::cyclic(3)));
        const Realignment b = realign(CdpOperator(scaled, CdpSet::cyclic(3)));
        CHECK(b.normalized);
        CHECK(a.sum == doctest::Approx(b.sum).epsilon(1e-12));
    }

    SUBCASE("non-abelian sets are rejected (dense route still available)") {
        const CdpSet rs3 = named(goldens::kRegularS3, 6);
        const CoefficientFamily fam = cdp::test::random_state_family(6, rng);
        const CdpOperator op(fam, rs3);
        CHECK_THROWS_AS(realign(op), Error);
        CHECK(realign_dense(op.dense()).rows() == 36);
    }
}

TEST_CASE("reduced states") {
    std::mt19937_64 rng(26);

    SUBCASE("single identity block over a set containing id") {
        CoefficientFamily fam = CoefficientFamily::zero(4);
        fam[0] = CMat::Identity(4, 4);
        auto [r1, r2] = reduced_states(CdpOperator(fam, CdpSet::cyclic(4)));
        CHECK(max_abs_diff(r1, CMat::Identity(4, 4)) == 0.0);
        CHECK(max_abs_diff(r2, CMat::Identity(4, 4)) == 0.0);
    }

    SUBCASE("family formulas equal dense partial traces") {
        const CdpSet v4 = named(goldens::kV4, 4);
        const CoefficientFamily fam = cdp::test::random_hermitian_family(4, rng);
        const CdpOperator op(fam, v4);
        auto [r1, r2] = reduced_states(op);
        const CMat& d = op.dense();
        CMat t1 = CMat::Zero(4, 4), t2 = CMat::Zero(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int p = 0; p < 4; ++p) {
                    t1(i, j) += d(i * 4 + p, j * 4 + p);
                    t2(i, j) += d(p * 4 + i, p * 4 + j);
                }
        CHECK(max_abs_diff(r1, t1) <= 1e-12);
        CHECK(max_abs_diff(r2, t2) <= 1e-12);
    }

    SUBCASE("first reduced state does not depend on the set") {
        const CoefficientFamily fam = cdp::test::random_hermitian_family(4, rng);
        auto [a, unused_a] = reduced_states(CdpOperator(fam, CdpSet::cyclic(4)));
        auto [b, unused_b] = reduced_states(CdpOperator(fam, named(goldens::kV4, 4)));
        CHECK(max_abs_diff(a, b) == 0.0);
    }
}

TEST_CASE("majorisation order") {
    CHECK(majorised({0.5, 0.3, 0.2}, {0.5, 0.3, 0.2}));
    CHECK(majorised({0.5, 0.5}, {1.0, 0.0}));
    CHECK_FALSE(majorised({1.0, 0.0}, {0.5, 0.5}));
    CHECK(majorised({0.25, 0.25, 0.25, 0.25}, {1.0}));  // zero padding

    CHECK_THROWS_WITH_AS(majorised({1.0}, {0.5}, 1e-9), "totals differ: 1.000000 vs 0.500000",
                         Error);

    SUBCASE("Schur: diagonal is majorised by the spectrum") {
        std::mt19937_64 rng(27);
        for (int trial = 0; trial < 500; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 5);
            const CMat a = cdp::test::random_hermitian(n, rng);
            std::vector<double> diag, lam;
            for (int i = 0; i < n; ++i) diag.push_back(a(i, i).real());
            const RVec ev = hermitian_eigenvalues(a);
            for (int i = 0; i < n; ++i) lam.push_back(ev(i));
            CHECK(majorised(diag, lam, 1e-10));
        }
    }
}

TEST_CASE("majorisation criterion") {
    std::mt19937_64 rng(28);

    SUBCASE("maximally mixed passes") {
        for (int n = 2; n <= 5; ++n) {
            const MajorisationVerdict v =
                majorisation_criterion(CdpOperator(max_mixed(n), CdpSet::cyclic(n)));
            CHECK(v.vs_rho1);
            CHECK(v.vs_rho2);
        }
    }

    SUBCASE("maximally entangled fails") {
        for (int n = 2; n <= 5; ++n) {
            const MajorisationVerdict v =
                majorisation_criterion(CdpOperator(max_entangled(n), CdpSet::cyclic(n)));
            CHECK_FALSE(v.vs_rho1);
            CHECK_FALSE(v.vs_rho2);
        }
    }

    SUBCASE("separable diagonal states pass") {
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 4);
            CoefficientFamily fam = CoefficientFamily::zero(n);
            std::uniform_real_distribution<double> u(0.0, 1.0);
            for (int k = 0; k < n; ++k)
                for (int i = 0; i < n; ++i) fam[k](i, i) = u(rng);
            const MajorisationVerdict v =
                majorisation_criterion(CdpOperator(fam.normalized(), CdpSet::cyclic(n)));
            CHECK(v.vs_rho1);
            CHECK(v.vs_rho2);
        }
    }
}

TEST_CASE("analyze assembles a full report") {
    std::mt19937_64 rng(29);

    SUBCASE("separable diagonal state over an abelian set") {
        CoefficientFamily fam = CoefficientFamily::zero(3);
        std::uniform_real_distribution<double> u(0.1, 1.0);
        for (int k = 0; k < 3; ++k)
            for (int i = 0; i < 3; ++i) fam[k](i, i) = u(rng);
        const SeparabilityReport rep = analyze(CdpOperator(fam, CdpSet::cyclic(3)));
        CHECK(rep.hermitian);
        CHECK(rep.psd);
        CHECK(rep.abelian);
        CHECK(rep.ppt);
        CHECK(rep.realignment_closed_form);
        CHECK(rep.realignment_pass);
        CHECK(rep.majorisation.vs_rho1);
        CHECK(rep.majorisation.vs_rho2);
        CHECK(rep.pt_family.has_value());
        CHECK(rep.pt_sigma.has_value());
        CHECK(rep.pt_block_min.size() == 3);
    }

    SUBCASE("maximally entangled state fails every criterion") {
        const SeparabilityReport rep =
            analyze(CdpOperator(max_entangled(3), CdpSet::cyclic(3)));
        CHECK_FALSE(rep.ppt);
        CHECK_FALSE(rep.realignment_pass);
        CHECK_FALSE(rep.majorisation.vs_rho1);
    }

    SUBCASE("non-abelian sets take the dense fallback") {
        const CdpSet rs3 = named(goldens::kRegularS3, 6);
        const CoefficientFamily fam = cdp::test::random_state_family(6, rng);
        const SeparabilityReport rep = analyze(CdpOperator(fam, rs3));
        CHECK_FALSE(rep.abelian);
        CHECK_FALSE(rep.realignment_closed_form);
        CHECK_FALSE(rep.pt_family.has_value());
    }

    SUBCASE("non-Hermitian input is rejected") {
        std::vector<CMat> mats;
        for (int k = 0; k < 3; ++k) mats.push_back(cdp::test::random_complex(3, rng));
        CHECK_THROWS_AS(analyze(CdpOperator(CoefficientFamily(mats), CdpSet::cyclic(3))), Error);
    }
}
