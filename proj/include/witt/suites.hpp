#pragma once

#include "witt/io.hpp"
#include "witt/rings.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace witt {

struct CaseResult {
    std::string name;
    bool pass = true;
    int checked = 0;
    std::string detail;  // first failure, or a short summary
    double ms = 0;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};
json to_json(const CaseResult& c, bool timings = true);

// Witt vectors over F_p[z] (one variable) unless noted.
CaseResult check_universal_polys(int p, int n);
CaseResult check_ring_axioms(int p, int n, int samples, Rng& rng);
CaseResult check_route_agreement(int p, int n, int samples, Rng& rng);  // universal vs w~ lift
CaseResult check_scalar_iso(int p, int n);                                // exhaustive tables
// F V = p, x V(y) = V(F(x) y), F[a] = [a^p], V F = p, decomposition, and
// 0 -> W_r -V^n-> W_{n+r} -R^r-> W_n -> 0 for every split of n.
CaseResult check_witt_identities(int p, int n, int samples, Rng& rng);
// Roundtrip through the inverse, ring homomorphism, and image meets p^i exactly in V^i.
CaseResult check_tilde_w(int p, int n, int samples, Rng& rng);
// p = 2, n = 2: F~ is a bijection onto the closed elements of (Z/4)[t] of degree <= max_deg.
CaseResult check_tilde_F_closed(int max_deg);

CaseResult check_weyl_words(int p, int samples, Rng& rng);
CaseResult check_theta_units(int p, int n, int m);

// z^r d^[s] on P^1 for r, s <= max against the set 0 <= r <= 2s; fails with witnesses.
CaseResult check_p1_globality(int max, int p);

CaseResult check_generation(int p, int d, int j, int bound);

struct SuiteConfig {
    std::string suite;
    int p = 3, n = 2, d = 2, j = 0, q = 2, bound = -1;
    int samples = 100;
    int a_min = -4, a_max = 4;
    uint64_t seed = 1;
};
std::vector<std::string> suite_names();
// {"suite", "config", "cases": [...], "cases_run", "failures"}; throws UnknownSuite.
json run_suite(const SuiteConfig& cfg, bool timings = true);

}  // namespace witt
