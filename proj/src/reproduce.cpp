#include "cdp/reproduce.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "cdp/cdp_operator.hpp"
#include "cdp/cdp_set.hpp"
#include "cdp/error.hpp"
#include "cdp/maps.hpp"
#include "cdp/separability.hpp"
#include "golden_tables.hpp"

namespace cdp {

namespace {

CdpSet named_set(const std::vector<std::string>& cycles, int n) {
    std::vector<Permutation> perms;
    perms.reserve(cycles.size());
    for (const auto& c : cycles) perms.push_back(Permutation::from_cycles(c, n, 1));
    return CdpSet::verify(std::move(perms));
}

CMat random_hermitian(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    CMat x(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = Complex(dist(rng), dist(rng));
    return (x + x.adjoint()) / 2.0;
}

CoefficientFamily random_hermitian_family(int n, std::mt19937_64& rng) {
    std::vector<CMat> mats;
    mats.reserve(n);
    for (int k = 0; k < n; ++k) mats.push_back(random_hermitian(n, rng));
    return CoefficientFamily(std::move(mats));
}

class Runner {
public:
    template <typename F>
    void check(const std::string& name, F&& body) {
        CheckResult r;
        r.name = name;
        try {
            std::string detail;
            r.pass = body(detail);
            r.detail = detail;
        } catch (const Error& e) {
            r.pass = false;
            r.detail = std::string(e.code()) + ": " + e.what();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }

    std::vector<CheckResult> results;
};

std::string fmt(double x) {
    std::ostringstream out;
    out << x;
    return out.str();
}

}  // namespace

std::vector<CheckResult> reproduce_all() {
    Runner run;
    std::mt19937_64 rng(20260810);

    const CdpSet c4 = CdpSet::cyclic(4);
    const CdpSet v4 = named_set(goldens::kV4, 4);
    const CdpSet sigma3 = named_set(goldens::kSigma3, 3);
    const CdpSet sigma4 = named_set(goldens::kSigma4, 4);
    const CdpSet sigma4p = named_set(goldens::kSigma4Prime, 4);
    const CdpSet sigma5 = named_set(goldens::kSigma5, 5);
    const CdpSet rs3 = named_set(goldens::kRegularS3, 6);

    // ---- permutation algebra -------------------------------------------------
    run.check("compose-cyclic-shift", [&](std::string&) {
        const Permutation c = CdpSet::cyclic(4)[1];
        const Permutation c2 = c.compose(c);
        for (int t = 0; t < 4; ++t)
            if (c2(t) != (t + 2) % 4) return false;
        return true;
    });

    run.check("inverse-cyclic-powers", [&](std::string&) {
        const CdpSet c7 = CdpSet::cyclic(7);
        for (int k = 1; k < 7; ++k)
            if (c7[k].inverse() != c7[7 - k]) return false;
        return true;
    });

    run.check("parse-cycles-two-cycle-product", [&](std::string&) {
        const Permutation p = Permutation::from_cycles("(12)(345)", 5, 1);
        return p.images() == std::vector<int>{1, 0, 3, 4, 2};
    });

    run.check("perm-matrix-orthogonality", [&](std::string&) {
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b) {
                const double t = (sigma5[a].inverse().matrix() * sigma5[b].matrix()).trace();
                const bool cdp = a != b;  // pairwise completely different
                if (cdp != (std::abs(t) < 1e-12)) return false;
            }
        return true;
    });

    // ---- CDP sets ------------------------------------------------------------
    run.check("cdp-set-degree5", [&](std::string& d) {
        if (sigma5.is_abelian() || sigma5.is_group()) {
            d = "unexpected structure flags";
            return false;
        }
        return true;
    });

    run.check("non-cdp-group-rejected", [&](std::string&) {
        std::vector<Permutation> g = {
            Permutation::identity(4), Permutation::from_cycles("(12)", 4, 1),
            Permutation::from_cycles("(34)", 4, 1), Permutation::from_cycles("(12)(34)", 4, 1)};
        try {
            CdpSet::verify(std::move(g));
        } catch (const Error& e) {
            return std::string(e.code()) == "not-cdp";
        }
        return false;
    });

    run.check("conjugated-sigma4-is-c4", [&](std::string&) {
        return sigma4.canonicalized().conjugated().same_set(named_set(goldens::kConjugatedSigma4, 4));
    });

    run.check("conjugated-sigma4-prime-is-v4", [&](std::string&) {
        return sigma4p.canonicalized().conjugated().same_set(v4);
    });

    run.check("conjugated-sigma5-is-itself", [&](std::string&) {
        return sigma5.canonicalized().conjugated().same_set(sigma5);
    });

    run.check("conjugated-regular-s3", [&](std::string&) {
        return rs3.conjugated().same_set(named_set(goldens::kConjugatedRegularS3, 6));
    });

    run.check("abelian-conjugated-is-inverse-set", [&](std::string&) {
        for (const CdpSet* s : {&c4, &v4}) {
            const CdpSet e = s->conjugated();
            for (int i = 0; i < s->n(); ++i)
                if (e[i] != (*s)[i].inverse()) return false;
        }
        return true;
    });

    run.check("structure-flags", [&](std::string& d) {
        if (!c4.is_abelian() || !c4.is_group()) d += "cyclic; ";
        if (sigma4.is_group()) d += "sigma4; ";
        if (!rs3.is_group() || rs3.is_abelian()) d += "regular-s3; ";
        return d.empty();
    });

    run.check("group-table-identity-regular-s3", [&](std::string&) {
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                if (rs3[i].compose(rs3[j]) != rs3[rs3[i](j)]) return false;
        return true;
    });

    run.check("xi-cyclic", [&](std::string&) {
        const CdpSet c6 = CdpSet::cyclic(6);
        const Permutation xi = c6.xi();
        for (int k = 0; k < 6; ++k)
            if (xi(k) != (6 - k) % 6) return false;
        return true;
    });

    run.check("xi-regular-s3", [&](std::string&) {
        return rs3.xi() == Permutation::from_cycles("(12)", 6, 0);
    });

    run.check("xi-v4-identity", [&](std::string&) { return v4.xi().is_identity(); });

    run.check("transform-sigma3-right-translation", [&](std::string&) {
        const CdpSet t = sigma3.transformed(Permutation::identity(3),
                                            Permutation::from_cycles("(23)", 3, 1));
        std::vector<Permutation> want = {Permutation::identity(3),
                                         Permutation::from_cycles("(123)", 3, 1),
                                         Permutation::from_cycles("(132)", 3, 1)};
        return t.same_set(CdpSet::verify(std::move(want)));
    });

    run.check("translation-identities-degree4", [&](std::string& d) {
        // Sigma4 = (34) * <(1324)> and (23) * Sigma4' * (34) = V(4)
        const CdpSet conj4 = named_set(goldens::kConjugatedSigma4, 4);
        const CdpSet left = conj4.transformed(Permutation::from_cycles("(34)", 4, 1),
                                              Permutation::identity(4));
        if (!left.same_set(sigma4)) d = "left translation";
        const CdpSet both = sigma4p.transformed(Permutation::from_cycles("(23)", 4, 1),
                                                Permutation::from_cycles("(34)", 4, 1));
        if (!both.same_set(v4)) d += " two-sided translation";
        return d.empty();
    });

    run.check("abelianize-sigma3", [&](std::string&) {
        auto [prime, s1] = sigma3.abelianized();
        return s1 == Permutation::from_cycles("(23)", 3, 1) && prime.is_abelian() &&
               prime.same_set(CdpSet::cyclic(3)) &&
               prime.canonicalized().conjugated().same_set(sigma3.canonicalized().conjugated());
    });

    run.check("abelianize-sigma4-prime", [&](std::string&) {
        auto [prime, s1] = sigma4p.abelianized();
        (void)s1;
        return prime.canonicalized().conjugated().same_set(
            sigma4p.canonicalized().conjugated());
    });

    run.check("centraliser-translation-same-conjugated", [&](std::string&) {
        // right translation by an element fixing 0 preserves M(E)
        const CdpSet left = sigma3.canonicalized();
        const CdpSet right = left.transformed(Permutation::identity(3),
                                              Permutation::from_cycles("(23)", 3, 1))
                                 .canonicalized();
        return left.conjugated().same_set(right.conjugated());
    });

    run.check("regular-representation-z2xz2", [&](std::string&) {
        const std::vector<std::vector<int>> table = {
            {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        return CdpSet::regular_representation(table).same_set(v4);
    });

    run.check("enumerate-degree3", [&](std::string& d) {
        const auto sets = enumerate_all(3, true);
        if (sets.size() != 2) {
            d = "count " + std::to_string(sets.size());
            return false;
        }
        return (sets[0].same_set(CdpSet::cyclic(3)) && sets[1].same_set(sigma3)) ||
               (sets[1].same_set(CdpSet::cyclic(3)) && sets[0].same_set(sigma3));
    });

    run.check("enumerate-degree4", [&](std::string& d) {
        const auto sets = enumerate_all(4, true);
        d = std::to_string(sets.size()) + " sets";
        return sets.size() == 24;
    });

    run.check("fixed-point-coverage", [&](std::string&) {
        for (const CdpSet* s : {&sigma5, &sigma4, &rs3}) {
            for (int j = 0; j < s->n(); ++j) {
                bool fixed = false;
                for (int i = 0; i < s->n(); ++i)
                    if ((*s)[i](j) == j) fixed = true;
                if (!fixed) return false;
            }
            for (int i = 0; i < s->n(); ++i)
                if ((*s)[i].inverse()(0) < 0) return false;  // some j maps to 0
        }
        return true;
    });

    run.check("abelian-symmetry", [&](std::string&) {
        const CdpSet c5 = CdpSet::cyclic(5);
        for (const CdpSet* s : {&v4, &c5})
            for (int i = 0; i < s->n(); ++i)
                for (int j = 0; j < s->n(); ++j)
                    if ((*s)[i](j) != (*s)[j](i)) return false;
        return true;
    });

    run.check("mixed-commutation-regular-s3", [&](std::string&) {
        const CdpSet e = rs3.conjugated();
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                const Eigen::MatrixXd lhs = rs3[i].matrix() * e[j].matrix();
                const Eigen::MatrixXd rhs = e[j].matrix() * rs3[i].matrix();
                if ((lhs - rhs).cwiseAbs().maxCoeff() > 0) return false;
            }
        return true;
    });

    run.check("conjugated-composition-law", [&](std::string&) {
        const CdpSet e = rs3.conjugated();
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                if (e[i].compose(e[j]) != e[rs3[i](j)]) return false;
        return true;
    });

    run.check("conjugated-inverse-via-xi", [&](std::string&) {
        for (const CdpSet* s : {&rs3, &c4, &v4}) {
            const CdpSet e = s->conjugated();
            const Permutation xi = s->xi();
            for (int i = 0; i < s->n(); ++i)
                if (e[i].inverse() != e[xi(i)]) return false;
        }
        return true;
    });

    // ---- operator structure ----------------------------------------------------
    auto pattern_matches = [](const CdpSet& sigma,
                              const std::array<std::array<int, 16>, 16>& want) {
        const int n = 4;
        for (int r = 0; r < 16; ++r)
            for (int c = 0; c < 16; ++c) {
                const int i = r / n, p = r % n, j = c / n, q = c % n;
                int k = -1;
                for (int t = 0; t < n; ++t)
                    if (sigma[t](i) == p && sigma[t](j) == q) k = t;
                if (k != want[r][c]) return false;
            }
        return true;
    };

    run.check("pattern-c4-16x16", [&](std::string&) { return pattern_matches(c4, goldens::pattern_c4()); });
    run.check("pattern-v4-16x16", [&](std::string&) { return pattern_matches(v4, goldens::pattern_v4()); });

    run.check("subspace-bases", [&](std::string&) {
        const auto h1c = subspace_basis(c4, 1);
        const auto h1v = subspace_basis(v4, 1);
        const std::vector<std::pair<int, int>> wc = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
        const std::vector<std::pair<int, int>> wv = {{0, 1}, {1, 0}, {2, 3}, {3, 2}};
        return h1c == wc && h1v == wv;
    });

    run.check("block-spectrum-union", [&](std::string& d) {
        const CoefficientFamily fam = random_hermitian_family(4, rng);
        const CdpOperator op(fam, v4);
        std::vector<double> dense;
        const RVec ev = hermitian_eigenvalues(op.dense());
        for (int i = 0; i < ev.size(); ++i) dense.push_back(ev(i));
        const bool ok = same_real_multiset(dense, op.spectrum().all_real(), 1e-10);
        if (!ok) d = "eigenvalue multiset mismatch";
        return ok;
    });

    run.check("block-orthogonality", [&](std::string&) {
        const CoefficientFamily fam = random_hermitian_family(4, rng);
        for (int k = 0; k < 4; ++k)
            for (int l = 0; l < 4; ++l) {
                if (k == l) continue;
                CoefficientFamily fk = CoefficientFamily::zero(4);
                CoefficientFamily fl = CoefficientFamily::zero(4);
                fk[k] = fam[k];
                fl[l] = fam[l];
                const CMat prod = CdpOperator(fk, c4).dense() * CdpOperator(fl, c4).dense();
                if (prod.cwiseAbs().maxCoeff() > 0) return false;
            }
        return true;
    });

    run.check("trace-norm-additivity", [&](std::string& d) {
        const CoefficientFamily fam = random_hermitian_family(3, rng);
        const CdpOperator op(fam, CdpSet::cyclic(3));
        const double dense = trace_norm(op.dense());
        const double family = op.norms().tr;
        d = "dense " + fmt(dense) + " family " + fmt(family);
        return std::abs(dense - family) <= 1e-10;
    });

    run.check("hermitian-psd-family-vs-dense", [&](std::string&) {
        CoefficientFamily fam = random_hermitian_family(4, rng);
        const CdpOperator op(fam, v4);
        if (op.is_hermitian() != is_hermitian(op.dense(), 1e-12)) return false;
        // shift one block to become PSD-violating and compare again
        CoefficientFamily shifted = fam;
        shifted[2] -= (min_eigenvalue(fam[2]) + 0.5) * CMat::Identity(4, 4);
        const CdpOperator op2(shifted, v4);
        return op2.is_psd(1e-9) == (min_eigenvalue(op2.dense()) >= -1e-9);
    });

    run.check("pt-block-closed-form", [&](std::string&) {
        const CoefficientFamily fam = random_hermitian_family(4, rng);
        const PtSpectrum sp = pt_spectrum(CdpOperator(fam, c4));
        for (int k = 0; k < 4; ++k) {
            CoefficientFamily single = CoefficientFamily::zero(4);
            single[k] = fam[k];
            const CMat pt = partial_transpose_dense(CdpOperator(single, c4).dense());
            std::vector<double> dense;
            const RVec ev = hermitian_eigenvalues(pt);
            for (int i = 0; i < ev.size(); ++i) dense.push_back(ev(i));
            if (!same_real_multiset(dense, sp.block_eigenvalues(k), 1e-10)) return false;
        }
        return true;
    });

    run.check("pt-cdp-form-exact", [&](std::string&) {
        for (const CdpSet* s : {&c4, &v4}) {
            const CoefficientFamily fam = random_hermitian_family(s->n(), rng);
            const CdpOperator op(fam, *s);
            const PtAsCdp pt = pt_as_cdp(op);
            if (max_abs_diff(CdpOperator(pt.family, pt.sigma).dense(),
                             partial_transpose_dense(op.dense())) != 0.0)
                return false;
        }
        return true;
    });

    run.check("pt-v4-same-group", [&](std::string&) {
        const CoefficientFamily fam = random_hermitian_family(4, rng);
        const PtAsCdp pt = pt_as_cdp(CdpOperator(fam, v4));
        if (!pt.sigma.same_set(v4)) return false;
        for (int k = 0; k < 4; ++k)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    if (pt.family[k](i, j) != fam[v4[i](v4[j](k))](i, j)) return false;
        return true;
    });

    run.check("realignment-cdp-form-exact", [&](std::string&) {
        for (int n : {2, 3}) {
            const CoefficientFamily fam = random_hermitian_family(n, rng);
            const CdpOperator op(fam.normalized(), CdpSet::cyclic(n));
            const Realignment rl = realign(op);
            if (max_abs_diff(CdpOperator(rl.family, CdpSet::cyclic(n)).dense(),
                             realign_dense(op.dense())) != 0.0)
                return false;
        }
        const CoefficientFamily fam = random_hermitian_family(4, rng);
        const CdpOperator op(fam.normalized(), v4);
        return max_abs_diff(CdpOperator(realign(op).family, v4).dense(),
                            realign_dense(op.dense())) == 0.0;
    });

    run.check("realignment-extremes", [&](std::string& d) {
        for (int n = 2; n <= 5; ++n) {
            const CdpSet cn = CdpSet::cyclic(n);
            CoefficientFamily ent = CoefficientFamily::zero(n);
            ent[0] = CMat::Constant(n, n, 1.0 / n);
            const Realignment r_ent = realign(CdpOperator(ent, cn));
            CoefficientFamily mixed = CoefficientFamily::zero(n);
            for (int k = 0; k < n; ++k) mixed[k] = CMat::Identity(n, n) / (n * n);
            const Realignment r_mix = realign(CdpOperator(mixed, cn));
            if (std::abs(r_ent.sum - n) > 1e-9 || r_ent.pass) {
                d = "entangled sum " + fmt(r_ent.sum);
                return false;
            }
            if (std::abs(r_mix.sum - 1.0 / n) > 1e-9 || !r_mix.pass) {
                d = "mixed sum " + fmt(r_mix.sum);
                return false;
            }
        }
        return true;
    });

    run.check("reduced-states-match-partial-traces", [&](std::string&) {
        const CoefficientFamily fam = random_hermitian_family(4, rng);
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
        return max_abs_diff(r1, t1) <= 1e-12 && max_abs_diff(r2, t2) <= 1e-12;
    });

    run.check("schur-majorisation", [&](std::string&) {
        for (int trial = 0; trial < 100; ++trial) {
            const CMat a = random_hermitian(5, rng);
            std::vector<double> diag, lam;
            for (int i = 0; i < 5; ++i) diag.push_back(a(i, i).real());
            const RVec ev = hermitian_eigenvalues(a);
            for (int i = 0; i < 5; ++i) lam.push_back(ev(i));
            if (!majorised(diag, lam, 1e-10)) return false;
        }
        return true;
    });

    run.check("majorisation-criterion-extremes", [&](std::string&) {
        for (int n = 2; n <= 5; ++n) {
            const CdpSet cn = CdpSet::cyclic(n);
            CoefficientFamily mixed = CoefficientFamily::zero(n);
            for (int k = 0; k < n; ++k) mixed[k] = CMat::Identity(n, n) / (n * n);
            const MajorisationVerdict vm = majorisation_criterion(CdpOperator(mixed, cn));
            CoefficientFamily ent = CoefficientFamily::zero(n);
            ent[0] = CMat::Constant(n, n, 1.0 / n);
            const MajorisationVerdict ve = majorisation_criterion(CdpOperator(ent, cn));
            if (!vm.vs_rho1 || !vm.vs_rho2 || ve.vs_rho1 || ve.vs_rho2) return false;
        }
        return true;
    });

    // ---- linear maps -----------------------------------------------------------
    run.check("icqc-s3-choi", [&](std::string& d) {
        const IcqcChoi got = icqc_choi(IrrepChannel::s3(0.5, 0.25));
        CMat want(4, 4);
        want << 0.75, 0, 0, 0.25, 0, 0.25, 0, 0, 0, 0, 0.25, 0, 0.25, 0, 0, 0.75;
        const double diff = max_abs_diff(got.choi.matrix, want);
        d = "max diff " + fmt(diff);
        if (diff > 1e-12) return false;
        CMat a0(2, 2), a1(2, 2);
        a0 << 0.75, 0.25, 0.25, 0.75;
        a1 << 0.25, 0, 0, 0.25;
        return max_abs_diff(got.family[0], a0) <= 1e-12 && max_abs_diff(got.family[1], a1) <= 1e-12;
    });

    run.check("icqc-quaternion-choi", [&](std::string& d) {
        const IcqcChoi got = icqc_choi(IrrepChannel::quaternion(0.3, 0.2, 0.1));
        CMat want(4, 4);
        want << 0.6, 0, 0, 0.2, 0, 0.4, -0.1, 0, 0, -0.1, 0.4, 0, 0.2, 0, 0, 0.6;
        const double diff = max_abs_diff(got.choi.matrix, want);
        d = "max diff " + fmt(diff);
        if (diff > 1e-12) return false;
        CMat a0(2, 2), a1(2, 2);
        a0 << 0.6, 0.2, 0.2, 0.6;
        a1 << 0.4, -0.1, -0.1, 0.4;
        return max_abs_diff(got.family[0], a0) <= 1e-12 && max_abs_diff(got.family[1], a1) <= 1e-12;
    });

    run.check("quaternion-character-orthogonality", [&](std::string&) {
        const auto table = IrrepChannel::quaternion(0, 0, 0).full_character_table();
        for (std::size_t a = 0; a < table.size(); ++a)
            for (std::size_t b = 0; b < table.size(); ++b) {
                Complex s = 0;
                for (int g = 0; g < 8; ++g) s += table[a](g) * std::conj(table[b](g));
                if (std::abs(s - Complex(a == b ? 8.0 : 0.0, 0.0)) > 1e-12) return false;
            }
        return true;
    });

    run.check("quaternion-presentation-relations", [&](std::string&) {
        const auto ch = IrrepChannel::quaternion(0, 0, 0);
        const CMat qe = ch.elements[0], q1 = ch.elements[2], q2 = ch.elements[3],
                   q3 = ch.elements[4];
        return max_abs_diff(q1 * q1, -qe) <= 1e-15 && max_abs_diff(q2 * q2, -qe) <= 1e-15 &&
               max_abs_diff(q3 * q3, -qe) <= 1e-15 && max_abs_diff(q1 * q2 * q3, -qe) <= 1e-15;
    });

    run.check("icqc-covariance", [&](std::string&) {
        std::normal_distribution<double> dist(0.0, 1.0);
        for (const auto& ch :
             {IrrepChannel::s3(0.4, -0.2), IrrepChannel::quaternion(0.5, -0.3, 0.1)}) {
            for (int trial = 0; trial < 20; ++trial) {
                CMat x(2, 2);
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) x(i, j) = Complex(dist(rng), dist(rng));
                for (const auto& u : ch.elements) {
                    const CMat lhs = u * ch.apply(x) * u.adjoint();
                    const CMat rhs = ch.apply(u * x * u.adjoint());
                    if (max_abs_diff(lhs, rhs) > 1e-12) return false;
                }
            }
        }
        return true;
    });

    run.check("icqc-unit-weights-identity", [&](std::string&) {
        for (const auto& ch : {IrrepChannel::s3(1.0, 1.0), IrrepChannel::quaternion(1.0, 1.0, 1.0)}) {
            LinearMapOnMatrices map{[&ch](const CMat& x) { return ch.apply(x); }, "sum", 2};
            const ChoiOperator j = choi(map, ChoiLeg::MapOnSecond);
            LinearMapOnMatrices ident{[](const CMat& x) { return x; }, "id", 2};
            if (max_abs_diff(j.matrix, choi(ident, ChoiLeg::MapOnSecond).matrix) > 1e-12)
                return false;
        }
        return true;
    });

    run.check("reduction-family-identity", [&](std::string&) {
        const LinearMapOnMatrices r = reduction_map(4);
        const CMat j1 = choi(r, ChoiLeg::MapOnFirst).matrix;
        const CMat j2 = choi(r, ChoiLeg::MapOnSecond).matrix;
        if (max_abs_diff(j1, j2) != 0.0) return false;
        CoefficientFamily fam = CoefficientFamily::zero(4);
        fam[0] = CMat::Identity(4, 4) - CMat::Constant(4, 4, 1.0);
        for (int k = 1; k < 4; ++k) fam[k] = CMat::Identity(4, 4);
        return max_abs_diff(CdpOperator(fam, c4).dense(), j1) == 0.0 &&
               max_abs_diff(CdpOperator(fam, v4).dense(), j1) == 0.0;
    });

    run.check("reduction-applied-to-identity", [&](std::string&) {
        const LinearMapOnMatrices r = reduction_map(5);
        return max_abs_diff(r(CMat::Identity(5, 5)), 4.0 * CMat::Identity(5, 5)) == 0.0;
    });

    run.check("reduction-choi-n2-vs-identity-minus-swap", [&](std::string& d) {
        const CMat j = choi(reduction_map(2), ChoiLeg::MapOnFirst).matrix;
        CMat swap = CMat::Zero(4, 4);
        swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
        const CMat want = CMat::Identity(4, 4) - swap;
        const double diff = max_abs_diff(j, want);
        if (diff == 0.0) return true;
        std::ostringstream msg;
        msg << "known discrepancy: the computed Choi matrix differs from id-SWAP (max diff " << diff
            << "); it equals id - sum_ij e_ij(x)e_ij, whose partial transpose is id-SWAP (pt diff "
            << max_abs_diff(partial_transpose_dense(j), want) << ")";
        d = msg.str();
        return false;
    });

    run.check("antisym-unitary-invariants", [&](std::string&) {
        const AntisymUnitary u2 = antisym_unitary(Permutation::from_cycles("(01)", 2, 0));
        CMat want(2, 2);
        want << 0, -1, 1, 0;
        if (max_abs_diff(u2.matrix, want) != 0.0) return false;
        const AntisymUnitary u4 = antisym_unitary(Permutation::from_cycles("(01)(23)", 4, 0));
        return max_abs_diff(u4.matrix * u4.matrix.adjoint(), CMat::Identity(4, 4)) == 0.0 &&
               max_abs_diff(u4.matrix.transpose(), -u4.matrix) == 0.0;
    });

    run.check("breuer-hall-on-identity", [&](std::string&) {
        const auto u = antisym_unitary(Permutation::from_cycles("(01)(23)", 4, 0));
        const auto b = breuer_hall_map(u);
        return max_abs_diff(b(CMat::Identity(4, 4)), 2.0 * CMat::Identity(4, 4)) == 0.0;
    });

    run.check("breuer-hall-family-identity", [&](std::string&) {
        const auto u = antisym_unitary(Permutation::from_cycles("(01)(23)", 4, 0));
        const auto b = breuer_hall_map(u);
        const CMat j = choi(b, ChoiLeg::MapOnSecond).matrix;
        const CoefficientFamily fam = breuer_hall_family(v4, 1);
        if (max_abs_diff(CdpOperator(fam, v4).dense(), j) != 0.0) return false;
        if (fam[1].cwiseAbs().maxCoeff() != 0.0) return false;  // zero block at the pairing index
        return decompose(j, v4).n() == 4;  // the Choi matrix fits the support pattern
    });

    run.check("breuer-hall-choi-vs-table", [&](std::string& d) {
        const auto u = antisym_unitary(Permutation::from_cycles("(01)(23)", 4, 0));
        const CMat j = choi(breuer_hall_map(u), ChoiLeg::MapOnSecond).matrix;
        const auto table = goldens::breuer_hall_table();
        CMat want(16, 16);
        for (int r = 0; r < 16; ++r)
            for (int c = 0; c < 16; ++c) want(r, c) = table[r][c];
        const double diff = max_abs_diff(j, want);
        if (diff == 0.0) return true;
        // diagnose: equal diagonals, opposite off-diagonal signs
        bool sign_flip = true;
        for (int r = 0; r < 16 && sign_flip; ++r)
            for (int c = 0; c < 16 && sign_flip; ++c) {
                const double got = j(r, c).real();
                const double ref = want(r, c).real();
                if (r == c ? got != ref : got != -ref) sign_flip = false;
            }
        d = sign_flip ? "known discrepancy: reference table matches the computed Choi matrix only "
                        "after negating every off-diagonal entry"
                      : "mismatch beyond the documented sign pattern";
        return false;
    });

    run.check("breuer-hall-positive-on-projectors", [&](std::string&) {
        const auto u = antisym_unitary(Permutation::from_cycles("(01)(23)", 4, 0));
        const auto b = breuer_hall_map(u);
        std::normal_distribution<double> dist(0.0, 1.0);
        for (int trial = 0; trial < 100; ++trial) {
            CVec psi(4);
            for (int i = 0; i < 4; ++i) psi(i) = Complex(dist(rng), dist(rng));
            psi.normalize();
            if (min_eigenvalue(b(psi * psi.adjoint())) < -1e-10) return false;
        }
        return true;
    });

    return run.results;
}

}  // namespace cdp
