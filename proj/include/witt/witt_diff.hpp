#pragma once

#include "witt/weyl.hpp"
#include "witt/witt_core.hpp"

#include <string>
#include <utility>
#include <vector>

namespace witt {

// How an operator acts on W_{n+1}(A).
//   Twisted:     sum c [z^e] . d^{[r]}, the coefficient acting through the
//                V^{n - v_p(r)} layer (plain product when v_p(r) > n).
//   Conjugate:   w~^{-1} o L o w~ for the stored lift L; may raise NotInImage.
//   Teichmuller: sum [b_r] d^{[r]}, Witt product with Teichmuller coefficients.
enum class DiffMode { Twisted, Conjugate, Teichmuller };

struct WittDiffOp {
    int p = 2, n = 0;  // acts on W_{n+1}
    DiffMode mode = DiffMode::Twisted;
    WeylElement base;  // over F_p
    WeylElement lift;  // over Z/p^{n+1}, reduces to base
    std::vector<std::pair<WittVec, Exp>> teich;  // Teichmuller mode: ([b], r)
    int nvars() const { return lift.m; }
};

WittDiffOp lift_operator(const WeylElement& base, int n);
WittDiffOp conjugate_operator(const WeylElement& lift, int n);
WittDiffOp teichmuller_lift_op(const WeylElement& base, int n);
// i^*: first coordinates of the Teichmuller coefficients.
WeylElement reduce_op(const WittDiffOp& op);

// The pure lift of d^{[r]} in m variables, coefficient 1.
WittDiffOp partial_op(int p, int n, int m, const Exp& r, uint32_t neg = 0);

// Conjugation by w~ (twisted coefficients become z^{e p^{min(v_p(r), n)}}).
WittVec apply_witt(const WittDiffOp& op, const WittVec& x);
// Per-generator formula on c V^l([z^S]); independent of the conjugation route.
WittVec apply_witt_explicit(const WittDiffOp& op, const WittVec& x);

// v_p of a multi-index: minimum over nonzero entries; -1 stands for r = 0.
int vp_multi(const Exp& r, int p);

struct RelationReport {
    std::string relation;
    int cases = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

enum class Relation { Restriction, Frobenius, Verschiebung, Filtration };
Relation parse_relation(const std::string& s);
std::string relation_name(Relation r);

// d^{[r]} in variable `var` on W_{n+1}(F_p[z_0..z_{m-1}]) against random samples.
RelationReport check_relation(Relation which, int p, int n, int m, int var, int r, int samples, Rng& rng);
// Two lifts of d^{[r]} differing by p^{v_p(r)+1} g d^{[r]} restrict identically.
RelationReport check_lift_independence(int p, int n, int m, int var, int r, int pairs, Rng& rng);
// Outputs of an order-q operator lie in V^{n - v_p(q)}.
RelationReport image_valuation_check(int p, int n, int m, int var, int q, int samples, Rng& rng);
// d^{[r/p]}(f)^p = d^{[r]}(f^p) over F_p.
RelationReport check_frobenius_power(int p, int m, int r, int samples, Rng& rng);

struct BinomValuation {
    int valuation = 0;
    int bound = 0;
    bool holds() const { return valuation >= bound; }
};
BinomValuation valuation_binom(int p, int64_t w, int64_t z);

}  // namespace witt
