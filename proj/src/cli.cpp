#include "cdp/cli.hpp"

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cdp/error.hpp"
#include "cdp/io.hpp"
#include "cdp/maps.hpp"
#include "cdp/reproduce.hpp"
#include "cdp/separability.hpp"

namespace cdp::cli {

namespace {

using io::json;

struct Options {
    double tol = 1e-9;
    int base = -1;  // -1: honor the file's "# base:" directive, default 0
    std::string format = "json";
};

void emit_dense(std::ostream& out, const Options& opt, const CMat& dense, const CdpSet* sigma,
                const json& extra = json::object()) {
    if (opt.format == "grid") {
        out << (sigma ? io::render_grid(dense, *sigma)
                      : io::render_grid(dense, static_cast<int>(std::lround(
                                                   std::sqrt(static_cast<double>(dense.rows()))))));
        return;
    }
    json j = extra;
    j["dense"] = io::dense_to_json(dense);
    out << j.dump() << "\n";
}

json set_summary(const CdpSet& s) {
    json j = io::perms_to_json(s);
    j["flags"] = {{"abelian", s.is_abelian()},
                  {"group", s.is_group()},
                  {"contains_identity", s.contains_identity()},
                  {"canonical", s.is_canonical()}};
    json cycles = json::array();
    for (const auto& p : s.perms()) cycles.push_back(p.to_cycles());
    j["cycles"] = cycles;
    return j;
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"CDP toolkit: completely different permutations, the bipartite operators "
                 "they generate, and separability criteria"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--tol", opt.tol, "numeric tolerance")->check(CLI::PositiveNumber);
    app.add_option("--base", opt.base, "ground-set base of text inputs (0 or 1)");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "grid"}));

    // ---- set-level commands ----
    std::string check_file, conj_file, xi_file, table_file;
    auto* cmd_check = app.add_subcommand("check", "validate a permutation set and report flags");
    cmd_check->add_option("file", check_file, "JSON or cycle-notation file")->required();

    auto* cmd_conj = app.add_subcommand("conj", "conjugated set of a canonical CDP set");
    cmd_conj->add_option("file", conj_file)->required();

    auto* cmd_xi = app.add_subcommand("xi", "inverse-indexing permutation of a group CDP set");
    cmd_xi->add_option("file", xi_file)->required();

    int enum_n = 0;
    bool enum_canonical = false;
    bool enum_count_only = false;
    auto* cmd_enum = app.add_subcommand("enumerate", "list all maximal CDP sets of degree n");
    cmd_enum->add_option("--n", enum_n, "degree")->required();
    cmd_enum->add_flag("--canonical", enum_canonical, "emit canonical row order");
    cmd_enum->add_flag("--count", enum_count_only, "print only the count");

    auto* cmd_regular = app.add_subcommand("regular", "CDP set from a group multiplication table");
    cmd_regular->add_option("--table", table_file, "whitespace-separated table file")->required();

    // ---- operator-level commands ----
    std::string family_file, sigma_file;
    auto add_operator_inputs = [&](CLI::App* cmd) {
        cmd->add_option("--family", family_file, "coefficient family JSON")->required();
        cmd->add_option("--sigma", sigma_file, "CDP set file")->required();
    };
    auto* cmd_build = app.add_subcommand("build", "dense realization of rho[A, Sigma]");
    add_operator_inputs(cmd_build);
    auto* cmd_analyze = app.add_subcommand("analyze", "full separability report");
    add_operator_inputs(cmd_analyze);
    auto* cmd_pt = app.add_subcommand("pt", "partial transpose as a CDP matrix (abelian sets)");
    add_operator_inputs(cmd_pt);
    auto* cmd_realign = app.add_subcommand("realign", "realignment criterion");
    add_operator_inputs(cmd_realign);
    auto* cmd_majorize = app.add_subcommand("majorize", "majorisation criterion");
    add_operator_inputs(cmd_majorize);

    // ---- maps ----
    auto* cmd_maps = app.add_subcommand("maps", "linear-map gallery");
    cmd_maps->require_subcommand(1);
    int maps_n = 4;
    std::string pairing_text = "(01)(23)";
    std::string icqc_group = "s3";
    std::vector<double> icqc_weights;
    auto* cmd_red = cmd_maps->add_subcommand("reduction", "reduction map Choi matrix");
    cmd_red->add_option("--n", maps_n, "dimension");
    auto* cmd_bh = cmd_maps->add_subcommand("breuer-hall", "Breuer-Hall map Choi matrix");
    cmd_bh->add_option("--n", maps_n, "dimension (power of two)");
    cmd_bh->add_option("--pairing", pairing_text, "pairing permutation, cycle notation, 0-based");
    auto* cmd_icqc = cmd_maps->add_subcommand("icqc", "irreducibly covariant channel Choi matrix");
    cmd_icqc->add_option("--group", icqc_group)->check(CLI::IsMember({"s3", "quaternion"}));
    cmd_icqc->add_option("--weights", icqc_weights,
                         "component weights: l_sgn,l_lambda or l_t1,l_t2,l_t3")
        ->delimiter(',');

    // ---- reproduction ----
    auto* cmd_paper = app.add_subcommand("paper", "bundled reproduction checks");
    auto* cmd_reproduce = cmd_paper->add_subcommand("reproduce", "run all checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }

    auto load_set_arg = [&](const std::string& path) { return io::load_set(path, -1, opt.base); };
    auto load_operator = [&]() {
        CoefficientFamily fam = io::load_family(family_file);
        CdpSet sigma = load_set_arg(sigma_file).canonicalized();
        return CdpOperator(std::move(fam), std::move(sigma));
    };

    if (cmd_check->parsed()) {
        const CdpSet s = load_set_arg(check_file);
        json j = set_summary(s);
        j["valid"] = true;
        out << j.dump() << "\n";
        return 0;
    }
    if (cmd_conj->parsed()) {
        const CdpSet s = load_set_arg(conj_file).canonicalized();
        out << set_summary(s.conjugated()).dump() << "\n";
        return 0;
    }
    if (cmd_xi->parsed()) {
        const CdpSet s = load_set_arg(xi_file).canonicalized();
        const Permutation xi = s.xi();
        out << json{{"n", s.n()}, {"xi", xi.images()}, {"cycles", xi.to_cycles()}}.dump() << "\n";
        return 0;
    }
    if (cmd_enum->parsed()) {
        std::size_t count = 0;
        json sets = json::array();
        enumerate_cdp_sets(enum_n, enum_canonical, [&](const CdpSet& s) {
            ++count;
            if (!enum_count_only) {
                json perms = json::array();
                for (const auto& p : s.perms()) perms.push_back(p.images());
                sets.push_back(std::move(perms));
            }
        });
        json j{{"n", enum_n}, {"count", count}};
        if (!enum_count_only) j["sets"] = std::move(sets);
        out << j.dump() << "\n";
        return 0;
    }
    if (cmd_regular->parsed()) {
        const CdpSet s = CdpSet::regular_representation(io::load_table(table_file));
        out << set_summary(s).dump() << "\n";
        return 0;
    }
    if (cmd_build->parsed()) {
        const CdpOperator op = load_operator();
        emit_dense(out, opt, op.dense(), &op.sigma(), json{{"n", op.n()}});
        return 0;
    }
    if (cmd_analyze->parsed()) {
        const CdpOperator op = load_operator();
        out << io::report_to_json(analyze(op, opt.tol)).dump() << "\n";
        return 0;
    }
    if (cmd_pt->parsed()) {
        const CdpOperator op = load_operator();
        const PtAsCdp pt = pt_as_cdp(op);
        json j{{"family", io::family_to_json(pt.family)}, {"sigma", io::perms_to_json(pt.sigma)}};
        out << j.dump() << "\n";
        return 0;
    }
    if (cmd_realign->parsed()) {
        const CdpOperator op = load_operator();
        const Realignment rl = realign(op, opt.tol);
        json j{{"family", io::family_to_json(rl.family)},
               {"sum", rl.sum},
               {"pass", rl.pass},
               {"normalized", rl.normalized}};
        out << j.dump() << "\n";
        return 0;
    }
    if (cmd_majorize->parsed()) {
        const CdpOperator op = load_operator();
        const MajorisationVerdict v = majorisation_criterion(op, opt.tol);
        out << json{{"vs_rho1", v.vs_rho1}, {"vs_rho2", v.vs_rho2}, {"normalized", v.normalized}}
                   .dump()
            << "\n";
        return 0;
    }
    if (cmd_red->parsed()) {
        const ChoiOperator j = choi(reduction_map(maps_n), ChoiLeg::MapOnFirst);
        CoefficientFamily fam = decompose(j.matrix, CdpSet::cyclic(maps_n));
        emit_dense(out, opt, j.matrix, nullptr,
                   json{{"map", "reduction"},
                        {"leg", "map-on-first"},
                        {"family", io::family_to_json(fam)},
                        {"sigma", io::perms_to_json(CdpSet::cyclic(maps_n))}});
        return 0;
    }
    if (cmd_bh->parsed()) {
        const Permutation pairing = Permutation::from_cycles(pairing_text, maps_n, 0);
        const AntisymUnitary u = antisym_unitary(pairing);
        const ChoiOperator j = choi(breuer_hall_map(u), ChoiLeg::MapOnSecond);
        // the regular representation of (Z_2)^m containing the pairing
        std::vector<Permutation> xor_set;
        for (int k = 0; k < maps_n; ++k) {
            std::vector<int> img(maps_n);
            for (int t = 0; t < maps_n; ++t) img[t] = t ^ k;
            xor_set.emplace_back(std::move(img));
        }
        const CdpSet sigma = CdpSet::verify(std::move(xor_set));
        json extra{{"map", "breuer-hall"}, {"leg", "map-on-second"}};
        const int p = pairing(0);
        if (sigma.same_set(sigma.canonicalized()) && pairing == sigma[p]) {
            extra["family"] = io::family_to_json(breuer_hall_family(sigma, p));
            extra["sigma"] = io::perms_to_json(sigma);
        }
        emit_dense(out, opt, j.matrix, nullptr, extra);
        return 0;
    }
    if (cmd_icqc->parsed()) {
        IrrepChannel ch = [&] {
            if (icqc_group == "s3") {
                if (icqc_weights.size() != 2)
                    throw Error("usage", "s3 channel takes --weights l_sgn,l_lambda");
                return IrrepChannel::s3(icqc_weights[0], icqc_weights[1]);
            }
            if (icqc_weights.size() != 3)
                throw Error("usage", "quaternion channel takes --weights l_t1,l_t2,l_t3");
            return IrrepChannel::quaternion(icqc_weights[0], icqc_weights[1], icqc_weights[2]);
        }();
        const IcqcChoi res = icqc_choi(ch);
        emit_dense(out, opt, res.choi.matrix, nullptr,
                   json{{"map", "icqc-" + icqc_group},
                        {"leg", "map-on-second"},
                        {"family", io::family_to_json(res.family)},
                        {"sigma", io::perms_to_json(res.sigma)}});
        return 0;
    }
    if (cmd_reproduce->parsed() || cmd_paper->parsed()) {
        const auto results = reproduce_all();
        int failed = 0;
        for (const auto& r : results) {
            out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
            if (!r.detail.empty()) out << "  (" << r.detail << ")";
            out << "\n";
            if (!r.pass) ++failed;
        }
        out << results.size() - failed << "/" << results.size() << " checks passed\n";
        return failed == 0 ? 0 : 1;
    }
    err << json{{"error", "usage"}, {"message", "no subcommand"}}.dump() << "\n";
    return 2;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(argc, argv, out, err);
    } catch (const Error& e) {
        err << io::json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
        return e.code() == "usage" ? 2 : 1;
    } catch (const std::exception& e) {
        err << io::json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
}

}  // namespace cdp::cli
