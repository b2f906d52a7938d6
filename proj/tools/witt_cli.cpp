#include "witt/derham_witt.hpp"
#include "witt/io.hpp"
#include "witt/local_cohomology.hpp"
#include "witt/proj_cech.hpp"
#include "witt/steinberg.hpp"
#include "witt/suites.hpp"
#include "witt/weyl.hpp"
#include "witt/witt_diff.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace witt;

namespace {

struct Globals {
    int p = 3, n = 2;
    uint64_t seed = 1;
    std::string out, format = "json";
};

std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// Arrays of objects become tables; everything else prints as key: value.
void print_table(const json& j, std::ostream& os) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        if (v.is_array() && !v.empty() && v[0].is_object()) {
            os << it.key() << ":\n";
            std::vector<std::string> cols;
            for (auto c = v[0].begin(); c != v[0].end(); ++c) cols.push_back(c.key());
            for (size_t i = 0; i < cols.size(); ++i) os << (i ? "\t" : "  ") << cols[i];
            os << "\n";
            for (const auto& row : v) {
                for (size_t i = 0; i < cols.size(); ++i) os << (i ? "\t" : "  ") << (row.contains(cols[i]) ? cell(row[cols[i]]) : "");
                os << "\n";
            }
        } else {
            os << it.key() << ": " << cell(v) << "\n";
        }
    }
}

void emit(const Globals& g, const json& j) {
    std::ostringstream body;
    if (g.format == "table")
        print_table(j, body);
    else
        body << j.dump(2) << "\n";
    if (g.out.empty()) {
        std::cout << body.str();
        return;
    }
    std::filesystem::path path(g.out);
    if (path.is_relative())
        if (const char* dir = std::getenv("WITT_OUT_DIR")) path = std::filesystem::path(dir) / path;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path);
    if (!f) throw Error("IOError", "cannot write " + path.string());
    f << body.str();
}

json layers_json(const FinLenModule& m) { return {{"layers", m.layers}, {"length", m.length()}}; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Witt vectors, Witt differential operators and their cohomology"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--p", g.p, "prime");
    app.add_option("--n", g.n, "Witt length or coefficient exponent");
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--out", g.out, "output file (relative paths go under $WITT_OUT_DIR when set)");
    app.add_option("--format", g.format, "json or table")->check(CLI::IsMember({"json", "table"}));

    int exit_code = 0;
    std::function<void()> action;

    // witt
    auto* witt_cmd = app.add_subcommand("witt", "Witt vector arithmetic");
    witt_cmd->require_subcommand(1);
    auto* polys = witt_cmd->add_subcommand("polys", "universal sum, product and negation polynomials");
    polys->callback([&] {
        action = [&] {
            const auto& u = universal_polys(g.p, g.n);
            json j = {{"p", g.p}, {"n", g.n}, {"sum", json::array()}, {"prod", json::array()}, {"neg", json::array()}};
            for (int k = 0; k < g.n; ++k) {
                j["sum"].push_back(u.sum[k].str());
                j["prod"].push_back(u.prod[k].str());
                j["neg"].push_back(u.neg[k].str());
            }
            std::string why;
            j["ghost_compatible"] = verify_ghost_symbolic(u, &why);
            emit(g, j);
        };
    });
    std::string wop, win;
    auto* wop_cmd = witt_cmd->add_subcommand("op", "apply add|mul|frob|versch|restrict|teich to vectors in a JSON file");
    wop_cmd->add_option("--op", wop)->required()->check(CLI::IsMember({"add", "mul", "frob", "versch", "restrict", "teich"}));
    wop_cmd->add_option("--in", win, "{\"x\": W, \"y\": W} or W; teich takes {\"a\": Laurent}")->required();
    wop_cmd->callback([&] {
        action = [&] {
            json in = read_json_file(win);
            WittVec out;
            if (wop == "teich") {
                out = teichmuller(laurent_from_json(in.contains("a") ? in.at("a") : in), g.n);
            } else {
                WittVec x = witt_from_json(in.contains("x") ? in.at("x") : in);
                if (wop == "add" || wop == "mul") {
                    WittVec y = witt_from_json(in.at("y"));
                    out = wop == "add" ? wadd(x, y) : wmul(x, y);
                } else if (wop == "frob") {
                    out = frobenius(x);
                } else if (wop == "versch") {
                    out = verschiebung(x);
                } else {
                    out = restrict_w(x);
                }
            }
            emit(g, {{"op", wop}, {"result", to_json(out)}, {"str", out.str()}});
        };
    });

    // weyl
    auto* weyl_cmd = app.add_subcommand("weyl", "crystalline Weyl algebra");
    weyl_cmd->require_subcommand(1);
    std::string word;
    int vars = 1;
    auto* nf_cmd = weyl_cmd->add_subcommand("nf", "normal form of a word");
    nf_cmd->add_option("--word", word)->required();
    nf_cmd->add_option("--vars", vars);
    nf_cmd->callback([&] {
        action = [&] {
            WeylElement e = normal_form(parse_word(word, vars), g.p, g.n, vars);
            emit(g, {{"word", word}, {"normal_form", e.str()}, {"element", to_json(e)}});
        };
    });
    std::string op_file, poly_file;
    auto* wapply = weyl_cmd->add_subcommand("apply", "apply an operator to a Laurent polynomial");
    wapply->add_option("--op", op_file)->required();
    wapply->add_option("--poly", poly_file)->required();
    wapply->callback([&] {
        action = [&] {
            WeylElement op = weyl_from_json(read_json_file(op_file));
            Laurent f = laurent_from_json(read_json_file(poly_file));
            Laurent out = apply(op, f);
            emit(g, {{"result", to_json(out)}, {"str", out.str()}});
        };
    });
    int gr = 0, gs = 0, gmax = 10;
    auto* wglobal = weyl_cmd->add_subcommand("global", "globality of z^r d^[s] on P^1 (one pair, or the table up to --max)");
    auto* gr_opt = wglobal->add_option("--r", gr);
    wglobal->add_option("--s", gs);
    wglobal->add_option("--max", gmax);
    wglobal->callback([&] {
        action = [&] {
            if (gr_opt->count()) {
                GlobalityReport rep = is_global(WeylElement::term(g.p, 1, {gr}, {gs}, 1, 1u), 1, 1);
                emit(g, {{"r", gr}, {"s", gs}, {"global", rep.global}, {"stable", rep.stable}, {"claimed", gr >= 0 && gr <= 2 * gs}});
                return;
            }
            CaseResult c = check_p1_globality(gmax, g.p);
            emit(g, to_json(c));
            exit_code = c.pass ? 0 : 1;
        };
    });

    // wdiff
    auto* wdiff_cmd = app.add_subcommand("wdiff", "differential operators on Witt vectors");
    wdiff_cmd->require_subcommand(1);
    std::string lop_file;
    auto* lift_cmd = wdiff_cmd->add_subcommand("lift", "lift an F_p operator to W_{n+1}");
    lift_cmd->add_option("--op", lop_file)->required();
    lift_cmd->callback([&] {
        action = [&] {
            WeylElement base = weyl_from_json(read_json_file(lop_file));
            WittDiffOp op = lift_operator(base, g.n);
            emit(g, {{"n", g.n}, {"lift", to_json(op.lift)}, {"str", op.lift.str()}});
        };
    });
    std::string relation = "restr";
    int vd = 1, vr = 0, vsamples = 100;
    auto* verify_rel = wdiff_cmd->add_subcommand("verify", "check a relation on random samples");
    verify_rel->add_option("--relation", relation)->check(CLI::IsMember({"restr", "frob", "versch", "filtr"}));
    verify_rel->add_option("--d", vd, "number of variables");
    verify_rel->add_option("--r", vr, "order (default: all r <= p^2)");
    verify_rel->add_option("--samples", vsamples);
    verify_rel->callback([&] {
        action = [&] {
            Rng rng(g.seed);
            Relation rel = parse_relation(relation);
            json out = json::array();
            int fails = 0;
            for (int r = vr ? vr : 1; r <= (vr ? vr : g.p * g.p); ++r) {
                RelationReport rep = check_relation(rel, g.p, g.n, vd, 0, r, vsamples, rng);
                out.push_back({{"relation", rep.relation}, {"cases", rep.cases}, {"failures", rep.failures}});
                fails += !rep.ok();
            }
            emit(g, {{"relation", relation_name(rel)}, {"reports", out}});
            exit_code = fails ? 1 : 0;
        };
    });

    // drw
    auto* drw_cmd = app.add_subcommand("drw", "de Rham-Witt complex of affine space");
    drw_cmd->require_subcommand(1);
    int dd = 1, di = 0, dbound = 3;
    auto* basis_cmd = drw_cmd->add_subcommand("basis", "enumerate basis elements");
    basis_cmd->add_option("--d", dd);
    basis_cmd->add_option("--i", di);
    basis_cmd->add_option("--bound", dbound);
    basis_cmd->callback([&] {
        action = [&] {
            json out = json::array();
            for (const auto& key : enumerate_basis(g.p, g.n, dd, di, dbound)) out.push_back(to_json(basis_element(g.p, g.n, key.r, key.P))["terms"][0]);
            emit(g, {{"p", g.p}, {"n", g.n}, {"d", dd}, {"i", di}, {"count", out.size()}, {"basis", out}});
        };
    });
    std::string which, elem_file;
    auto* act_cmd = drw_cmd->add_subcommand("act", "apply F, V or d");
    act_cmd->add_option("--which", which)->required()->check(CLI::IsMember({"F", "V", "d"}));
    act_cmd->add_option("--elem", elem_file)->required();
    act_cmd->callback([&] {
        action = [&] {
            DRWElement x = drw_from_json(read_json_file(elem_file));
            DRWElement y = act(parse_drw_op(which), x);
            emit(g, {{"which", which}, {"result", to_json(y)}, {"str", y.str()}});
        };
    });

    // cohomology
    auto* coh_cmd = app.add_subcommand("cohomology", "cohomology of Witt line bundles on P^d");
    coh_cmd->require_subcommand(1);
    int cd = 1, ca = 0, cdeg = -1, amin = -4, amax = 4;
    auto* lb = coh_cmd->add_subcommand("line-bundle", "H^i(P^d, W_n O(a))");
    lb->add_option("--d", cd);
    lb->add_option("--a", ca);
    lb->add_option("--degree", cdeg);
    lb->callback([&] {
        action = [&] {
            LineBundleCohomology h = witt_cohomology(g.p, cd, g.n, ca);
            json degs = json::array();
            for (int i = 0; i <= cd; ++i)
                if (cdeg < 0 || cdeg == i) {
                    json e = layers_json(h.degrees[i]);
                    e["i"] = i;
                    degs.push_back(e);
                }
            emit(g, {{"case", {{"p", g.p}, {"n", g.n}, {"d", cd}, {"a", ca}}}, {"degrees", degs}});
        };
    });
    auto* sweep = coh_cmd->add_subcommand("sweep", "table over a range of twists");
    sweep->add_option("--d", cd);
    sweep->add_option("--a-min", amin);
    sweep->add_option("--a-max", amax);
    sweep->callback([&] {
        action = [&] {
            json rows = json::array();
            int mismatches = 0;
            for (int a = amin; a <= amax; ++a) {
                LineBundleCohomology h = witt_cohomology(g.p, cd, g.n, a);
                auto closed = witt_cohomology_closed_form(g.p, cd, g.n, a);
                for (int i = 0; i <= cd; ++i) {
                    bool ok = h.degrees[i] == closed[i];
                    mismatches += !ok;
                    rows.push_back({{"a", a}, {"i", i}, {"layers", h.degrees[i].layers}, {"length", h.degrees[i].length()}, {"closed_form", ok}});
                }
            }
            json out = {{"p", g.p}, {"n", g.n}, {"d", cd}, {"rows", rows}};
            Globals t = g;
            if (t.format == "json" && g.out.empty()) t.format = "table";
            emit(t, out);
            exit_code = mismatches ? 1 : 0;
        };
    });

    // localcoh
    auto* lc_cmd = app.add_subcommand("localcoh", "local cohomology along coordinate subspaces");
    lc_cmd->require_subcommand(1);
    int ld = 2, lj = 0, lbound = 7;
    bool trace = false;
    auto* gen = lc_cmd->add_subcommand("generate", "run the generation algorithm at n = 1");
    gen->add_option("--d", ld);
    gen->add_option("--j", lj);
    gen->add_option("--bound", lbound);
    gen->add_flag("--trace", trace);
    gen->callback([&] {
        action = [&] {
            GenerationReport rep = generation_run(g.p, ld, lj, lbound, trace);
            json missing = json::array(), steps = json::array(), cov = json::array();
            for (const auto& m : rep.missing) missing.push_back(m);
            static const char* kinds[] = {"step1", "step2", "redistribute"};
            for (const auto& s : rep.steps)
                steps.push_back({{"kind", kinds[static_cast<int>(s.kind)]}, {"op", s.op}, {"from", s.from}, {"to", s.to}, {"coeff", s.coeff}});
            for (const auto& c : rep.coverage)
                cov.push_back({{"iteration", c.iteration}, {"neg_bound", c.neg_bound}, {"reached", c.reached}, {"expected", c.expected}});
            json out = {{"p", g.p}, {"d", ld}, {"j", lj}, {"bound", lbound}, {"reached", rep.reached.size()},
                        {"expected", rep.expected}, {"missing", missing}, {"operators_global", rep.operators_global}, {"coverage", cov}};
            out["steps"] = trace ? steps : json(rep.steps.size());
            emit(g, out);
            exit_code = rep.success() ? 0 : 1;
        };
    });
    auto* stab = lc_cmd->add_subcommand("stability", "stability of N_{n,j} under the parabolic generators");
    stab->add_option("--d", ld);
    stab->add_option("--j", lj);
    stab->callback([&] {
        action = [&] {
            StabilityReport rep = stability_check(g.p, g.n, ld, lj);
            emit(g, {{"p", g.p}, {"n", g.n}, {"d", ld}, {"j", lj}, {"checked", rep.checked},
                     {"rewriting_closed", rep.closed()}, {"rewriting_failures", rep.rewriting_failures},
                     {"route_mismatches", rep.route_mismatches}, {"functorial_escapes", rep.functorial_escapes}});
            exit_code = rep.closed() && rep.functorial_escapes.empty() ? 0 : 1;
        };
    });

    // steinberg
    auto* st_cmd = app.add_subcommand("steinberg", "generalized Steinberg modules of GL_{d+1}(F_q)");
    int sq = 2, sdim = 1, sn = 1;
    std::string sI, sring = "Z";
    st_cmd->add_option("--q", sq);
    st_cmd->add_option("--dim", sdim, "d, for GL_{d+1}");
    st_cmd->add_option("--I", sI, "simple roots in I, e.g. \"0,1\"");
    st_cmd->add_option("--ring", sring)->check(CLI::IsMember({"Z", "Zpn"}));
    st_cmd->add_option("--n", sn, "exponent for Z/q^n");
    st_cmd->callback([&] {
        action = [&] {
            RootSet I = parse_roots(sI, sdim + 1);
            CoeffRing ring = sring == "Z" ? CoeffRing::Z : CoeffRing::Zpn;
            InductionComplex cx = build_complex(sq, sdim, I, ring, sn);
            AcyclicityReport rep = acyclicity_check(cx);
            json out = {{"q", sq}, {"dim", sdim}, {"I", roots_str(I)}, {"ring", sring}, {"term_ranks", cx.dims},
                        {"homology", rep.homology}, {"exact", rep.exact}, {"free", rep.cokernel_free}, {"euler", rep.euler}};
            out["ranks"] = {{"steinberg", rep.cokernel_rank}};
            if (ring == CoeffRing::Zpn) out["n"] = sn, out["layers"] = rep.cokernel_layers;
            else out["torsion"] = rep.torsion;
            emit(g, out);
            exit_code = rep.exact && rep.cokernel_free ? 0 : 1;
        };
    });

    // verify
    auto* verify = app.add_subcommand("verify", "deterministic verification suites");
    SuiteConfig cfg;
    std::string suite;
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--d", cfg.d);
    verify->add_option("--j", cfg.j);
    verify->add_option("--q", cfg.q);
    verify->add_option("--bound", cfg.bound);
    verify->add_option("--samples", cfg.samples);
    verify->add_option("--a-min", cfg.a_min);
    verify->add_option("--a-max", cfg.a_max);
    bool no_timings = false;
    verify->add_flag("--no-timings", no_timings, "omit timings for byte-identical reports");
    verify->callback([&] {
        action = [&] {
            cfg.suite = suite, cfg.p = g.p, cfg.n = g.n, cfg.seed = g.seed;
            json rep = run_suite(cfg, !no_timings);
            emit(g, rep);
            exit_code = rep["failures"].get<int>() ? 1 : 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    try {
        if (action) action();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
