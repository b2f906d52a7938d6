#include "witt/derham_witt.hpp"
#include "witt/local_cohomology.hpp"
#include "witt/proj_cech.hpp"
#include "witt/steinberg.hpp"
#include "witt/suites.hpp"
#include "witt/witt_diff.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace witt;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    // A refuted claim: the criterion fails, and reproducing the counterexample is the expected result.
    bool refuted = false;
    bool witness_reproduced = false;
    void absorb(const CaseResult& c) {
        if (!c.pass && pass) detail = c.name + ": " + c.detail;
        pass = pass && c.pass;
    }
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_s;  // 0: no time limit
    std::function<Outcome()> run;
};

Outcome c1() {
    Outcome o;
    Rng rng(101);
    for (int p : {2, 3, 5})
        for (int n = 1; n <= 4; ++n) {
            o.absorb(check_universal_polys(p, n));
            o.absorb(check_ring_axioms(p, n, 200, rng));
            o.absorb(check_route_agreement(p, n, 20, rng));
        }
    if (o.pass) o.detail = "12 cases, 200 triples each, universal and lift routes agree";
    return o;
}

Outcome c2() {
    Outcome o;
    for (int p : {2, 3})
        for (int n = 1; n <= 3; ++n) o.absorb(check_scalar_iso(p, n));
    if (o.pass) o.detail = "addition and multiplication tables exhaustive";
    return o;
}

Outcome c3() {
    Outcome o;
    Rng rng(103);
    for (int p : {2, 3, 5})
        for (int n = 1; n <= 4; ++n) o.absorb(check_witt_identities(p, n, 100, rng));
    if (o.pass) o.detail = "FV, xV(y), F[a], VF, V/R sequence on 100 samples per (p, n)";
    return o;
}

Outcome c4() {
    Outcome o;
    Rng rng(104);
    for (int p : {2, 3, 5})
        for (int n = 1; n <= 3; ++n) o.absorb(check_tilde_w(p, n, 100, rng));
    CaseResult f = check_tilde_F_closed(6);
    o.absorb(f);
    if (o.pass) o.detail = "roundtrip and p^i characterization on samples; " + f.detail;
    return o;
}

Outcome c5() {
    Outcome o;
    Rng rng(105);
    int cases = 0;
    for (int p : {2, 3})
        for (int n = 1; n <= 3; ++n)
            for (int m = 1; m <= 2; ++m)
                for (int r = 1; r <= p * p; ++r) {
                    for (Relation rel : {Relation::Restriction, Relation::Frobenius, Relation::Verschiebung, Relation::Filtration}) {
                        RelationReport rep = check_relation(rel, p, n, m, static_cast<int>(rng() % m), r, 100, rng);
                        ++cases;
                        if (!rep.ok()) o.fail(rep.relation + ": " + rep.failures[0]);
                    }
                    RelationReport li = check_lift_independence(p, n, m, 0, r, 50, rng);
                    if (!li.ok()) o.fail(li.relation + ": " + li.failures[0]);
                }
    if (o.pass) o.detail = std::to_string(cases) + " relation cases x 100 samples, lift pairs x 50";
    return o;
}

Outcome c6() {
    Outcome o;
    Rng rng(106);
    for (int p : {2, 3, 5}) o.absorb(check_weyl_words(p, 200, rng));
    for (int p : {2, 3})
        for (int n = 1; n <= 2; ++n)
            for (int m = 1; m <= 2; ++m) o.absorb(check_theta_units(p, n, m));
    if (o.pass) o.detail = "200 words per prime; theta matrix units exhaustive";
    return o;
}

Outcome c7() {
    Outcome o;
    o.refuted = true;
    for (int p : {2, 3, 5}) {
        CaseResult c = check_p1_globality(10, p);
        if (!c.pass) {
            o.pass = false;
            // the expected shape: claimed-global operators that are not global, nothing extra
            if (c.detail.find("claimed-global operators are not global") != std::string::npos &&
                c.detail.find("outside the claimed set") == std::string::npos)
                o.witness_reproduced = true;
            if (o.detail.empty()) o.detail = "p=" + std::to_string(p) + ": " + c.detail;
        }
    }
    if (o.pass) o.detail = "sets agree";
    return o;
}

Outcome c8() {
    Outcome o;
    int elements = 0;
    for (int p : {2, 3})
        for (int n = 1; n <= 3; ++n)
            for (int d = 1; d <= 3; ++d)
                for (int i = 0; i <= d; ++i) {
                    DRWIdentityReport rep = check_drw_identities(p, n, d, i, 3 * p * p);
                    elements += rep.elements;
                    if (!rep.ok()) o.fail(rep.failures[0]);
                }
    if (o.pass) o.detail = std::to_string(elements) + " basis elements";
    return o;
}

Outcome c9() {
    Outcome o;
    int cases = 0;
    for (int p : {2, 3})
        for (int n = 1; n <= 3; ++n)
            for (int d = 1; d <= 3; ++d)
                for (int a = -4; a <= 4; ++a) {
                    LineBundleCohomology h = witt_cohomology(p, d, n, a);
                    auto closed = witt_cohomology_closed_form(p, d, n, a);
                    ++cases;
                    std::ostringstream at;
                    at << "p=" << p << " n=" << n << " d=" << d << " a=" << a;
                    for (int i = 0; i <= d; ++i) {
                        if (!(h.degrees[i] == closed[i])) o.fail("H^" + std::to_string(i) + " differs from the layer sums at " + at.str());
                        if (i > 0 && i < d && h.degrees[i].length()) o.fail("H^" + std::to_string(i) + " nonzero at " + at.str());
                    }
                    if (a >= 0 && h.degrees[d].length()) o.fail("H^d nonzero for a >= 0 at " + at.str());
                    if (a < 0 && h.degrees[0].length()) o.fail("H^0 nonzero for a < 0 at " + at.str());
                }
    int l = witt_cohomology(2, 1, 2, -2).degrees[1].length();
    if (l != 4) o.fail("length H^1(P^1, W_2O(-2)) = " + std::to_string(l) + ", expected 4");
    int v = witt_cohomology(2, 2, 2, -1).degrees[2].length();
    if (v != 0) o.fail("H^2(P^2, W_2O(-1)) has length " + std::to_string(v));
    if (o.pass) o.detail = std::to_string(cases) + " line bundles; length H^1(P^1, W_2O(-2)) = 4; H^2(P^2, W_2O(-1)) = 0";
    return o;
}

Outcome c10() {
    Outcome o;
    struct Case { int d, j, p; };
    int steps = 0;
    for (Case c : {Case{2, 0, 3}, Case{2, 1, 3}, Case{3, 1, 3}, Case{2, 0, 5}}) {
        CaseResult r = check_generation(c.p, c.d, c.j, 2 * c.p + 1);
        steps += r.checked;
        o.absorb(r);
    }
    if (o.pass) o.detail = "all four reached sets equal the enumeration; no vanishing coefficient (" + std::to_string(steps) + " checks)";
    return o;
}

Outcome c11() {
    Outcome o;
    o.refuted = true;
    bool rewriting_closed = true;
    std::string escape;
    for (int j : {0, 1})
        for (int n = 1; n <= 2; ++n) {
            StabilityReport rep = stability_check(3, n, 2, j);
            if (!rep.closed()) {
                rewriting_closed = false;
                o.fail("rewriting route leaves N at n=" + std::to_string(n) + " j=" + std::to_string(j) + ": " +
                       (rep.rewriting_failures.empty() ? rep.route_mismatches[0] : rep.rewriting_failures[0]));
            }
            if (!rep.functorial_escapes.empty() && escape.empty())
                escape = "n=" + std::to_string(n) + " j=" + std::to_string(j) + ": " + rep.functorial_escapes[0] + " (" +
                         std::to_string(rep.functorial_escapes.size()) + " escapes)";
            if (n == 1 && !rep.functorial_escapes.empty()) o.fail("escape already at n = 1");
        }
    // the explicit witness: V([x^2 y]) -> V([(x+1)^2 y]) in the chart z_2 = 1 leaves N_{2,1}
    StabilityReport r1 = stability_check(3, 2, 2, 1);
    const std::string want = "z0->z0+1*z2 on V^1[z^(2,1,-3)] = V^1[z^(0,1,-1)] + 2*V^1[z^(1,1,-2)] + V^1[z^(2,1,-3)]";
    bool found = false;
    for (const auto& s : r1.functorial_escapes) found = found || s == want;
    if (rewriting_closed && !escape.empty()) {
        o.pass = false;
        o.witness_reproduced = found;
        o.detail = "closed under the termwise Teichmuller-sum rewriting, but the action of P_j on W_2 leaves N; " + escape;
        if (found) o.detail += "; chart witness z_2 = 1: V([x^2 y]) -> V([(x+1)^2 y]) has the term V([x y]) outside N_{2,1}";
    }
    return o;
}

Outcome c12() {
    Outcome o;
    struct G { int q, d, rank; };
    for (G g : {G{2, 1, 2}, G{3, 1, 3}, G{2, 2, 8}}) {
        std::string name = "GL_" + std::to_string(g.d + 1) + "(F_" + std::to_string(g.q) + ")";
        AcyclicityReport z = acyclicity_check(build_complex(g.q, g.d, 0));
        if (!z.exact) o.fail(name + " not exact over Z");
        if (!z.cokernel_free || z.cokernel_rank != g.rank)
            o.fail(name + " cokernel rank " + std::to_string(z.cokernel_rank) + (z.cokernel_free ? "" : " with torsion"));
        if (z.euler != 0) o.fail(name + " Euler characteristic over Z");
        for (int n = 1; n <= 2; ++n) {
            AcyclicityReport r = acyclicity_check(build_complex(g.q, g.d, 0, CoeffRing::Zpn, n));
            if (!r.exact || !r.cokernel_free || r.cokernel_layers != std::vector<int>(n, g.rank) || r.euler != 0)
                o.fail(name + " over Z/" + std::to_string(g.q) + "^" + std::to_string(n));
        }
    }
    if (o.pass) o.detail = "exact over Z, Z/p, Z/p^2; ranks 2, 3, 8, torsion-free";
    return o;
}

}  // namespace

int main() {
    std::vector<Criterion> all = {
        {1, "universal Witt polynomials and ring axioms", 10, c1},
        {2, "W_n(F_p) = Z/p^n", 1, c2},
        {3, "Witt identities and the V/R sequence", 0, c3},
        {4, "w~ and F~", 5, c4},
        {5, "relations for Witt differential operators", 60, c5},
        {6, "crystalline Weyl normal form and theta units", 0, c6},
        {7, "globality of z^r d^[s] on P^1", 0, c7},
        {8, "de Rham-Witt identities", 30, c8},
        {9, "Witt line bundle cohomology sweep", 300, c9},
        {10, "generation algorithm", 120, c10},
        {11, "stability of N_{n,j}", 0, c11},
        {12, "Steinberg complexes", 60, c12},
    };
    bool ok = true;
    int passed = 0, refuted = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
            o.refuted = false;
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && s > c.limit_s) o.fail("time limit " + std::to_string(c.limit_s) + " s exceeded");
        std::string verdict = o.pass ? "PASS" : (o.refuted && o.witness_reproduced ? "FAIL (refuted)" : "FAIL");
        std::printf("criterion %2d: %-15s %-46s %8.2fs  %s\n", c.id, verdict.c_str(), c.title.c_str(), s, o.detail.c_str());
        std::fflush(stdout);
        if (o.pass) ++passed;
        else if (o.refuted && o.witness_reproduced) ++refuted;
        else ok = false;
    }
    std::printf("summary: %d passed, %d failed with a reproduced counterexample, %d failed otherwise\n", passed, refuted,
                static_cast<int>(all.size()) - passed - refuted);
    return ok ? 0 : 1;
}
