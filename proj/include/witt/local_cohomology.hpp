#pragma once

#include "witt/weyl.hpp"
#include "witt/witt_core.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace witt {

// Exponent vectors m in Z^{d+1}: m_0..m_j >= 0, m_{j+1}..m_d < 0, sum 0.
bool in_index_set(const Exp& m, int j);
std::vector<Exp> enumerate_index(int d, int j, int bound);  // |m_i| <= bound
std::vector<Exp> index_generators(int d, int j);            // m_i = -1 for i > j

// Monomial z^u is zero in the local cohomology once some u_i >= 0, i > j.
bool killed(const Exp& u, int j);
uint32_t inverted_mask(int d, int j);

// Sum of c * V^l([z^u]) with (l, u) primitive: l = 0 or p does not divide u.
// Coefficients live in Z/p^{n-l}; p V^l([z^u]) = V^{l+1}([z^{pu}]).
struct CohClass {
    int p = 3, n = 1, d = 2, j = 0;
    std::map<std::pair<int, Exp>, int64_t> terms;

    CohClass() = default;
    CohClass(int p_, int n_, int d_, int j_) : p(p_), n(n_), d(d_), j(j_) {}
    static CohClass symbol(int p, int n, int d, int j, int l, const Exp& u, int64_t c = 1);

    void add(int l, Exp u, int64_t c);
    CohClass operator+(const CohClass& o) const;
    CohClass scaled(int64_t c) const;
    bool is_zero() const { return terms.empty(); }
    bool operator==(const CohClass& o) const { return p == o.p && n == o.n && d == o.d && j == o.j && terms == o.terms; }
    bool operator!=(const CohClass& o) const { return !(*this == o); }
    // Base-p digit expansion: sum c V^l([z^u]) with 0 < c < p, any (l, u).
    std::vector<MonoTerm> digits() const;
    std::string str() const;
};

// Projection of a degree-0 Witt vector over k[z_0..z_d] localized at z_{j+1}..z_d.
CohClass class_reduce(const WittVec& x, int d, int j);
WittVec class_representative(const CohClass& c);

// y_{il}^{[r]} = z_i^r d_l^{[r]} on classes.  At n = 1 through the binomial
// formula; at n > 1 symbolwise through V-compatibility of the w~-conjugated lift.
CohClass y_action(int i, int l, int r, const CohClass& c);
// Whole-vector route: lifted operator on a representative, then class_reduce.
CohClass y_action_witt(int i, int l, int r, const CohClass& c);
// n = 1 route through the Weyl algebra on Laurent monomials.
CohClass y_action_weyl(int i, int l, int r, const CohClass& c);

enum class GenStepKind { Step1, Step2, Redistribute };
struct GenStep {
    GenStepKind kind = GenStepKind::Step1;
    std::string op;
    Exp from, to;
    int64_t coeff = 0;  // mod p
};

struct CoverageLevel {
    int iteration = 0;
    int neg_bound = 0;  // all m with |m_i| <= neg_bound for i > j
    int expected = 0, reached = 0;
};

struct GenerationReport {
    int p = 3, d = 2, j = 0, bound = 0;
    std::set<Exp> reached;
    std::vector<Exp> missing;
    std::vector<GenStep> steps;
    std::vector<CoverageLevel> coverage;
    bool operators_global = false;
    int expected = 0;
    bool success() const { return missing.empty() && operators_global; }
};

// Steps 1-3 of the generation argument at n = 1 starting from I_j; each
// prescribed coefficient is checked nonzero mod p (throws CoefficientVanished).
GenerationReport generation_run(int p, int d, int j, int bound, bool trace = false);

// Elementary generators of the parabolic P_j acting on functions:
// unipotent z_s -> z_s + c z_t, torus z_i -> t_i^{-1} z_i.
struct ParabolicGen {
    bool torus = false;
    int s = 0, t = 0;
    int64_t c = 1;
    std::vector<int64_t> diag;
    std::string str() const;
};
std::vector<ParabolicGen> parabolic_generators(int p, int d, int j);
bool in_parabolic(const ParabolicGen& g, int j);

// g(z^u) as a Laurent polynomial over F_p; an inverted variable substituted by
// a series is cut at k < trunc * |u_t| (trunc = 1 is the kill rule at n = 1).
Laurent substitute_monomial(const ParabolicGen& g, const Exp& u, int p, int d, int j, int64_t trunc);
// Action on classes at n = 1.
CohClass parabolic_action(const ParabolicGen& g, const CohClass& c);

// Generators V^l(prod_{m in I_j} (T^m)^{i_m}) with sum i_m = p^r, r <= l.
struct NGenerator {
    int level = 0;
    std::vector<int> mult;  // indexed like index_generators(d, j)
    Exp exponent;           // sum_m i_m m
};
struct GeneratorModule {
    int p = 3, n = 1, d = 2, j = 0;
    std::vector<Exp> basis_vectors;  // I_j
    std::vector<NGenerator> gens;
    CohClass element(const NGenerator& g) const;
    bool contains(const CohClass& c) const;
};
GeneratorModule generator_module(int p, int n, int d, int j);

enum class NAction { Rewriting, Product, Functorial };
// Rewriting: n = 1 images of the T^m, then Teichmuller sums and V-products.
// Product: the same truncated images multiplied out in W_{n-l}.
// Functorial: W_n of the substitution on the exact Teichmuller symbol.
CohClass parabolic_action_n(const ParabolicGen& g, const GeneratorModule& N, const NGenerator& x, NAction how);

struct StabilityReport {
    int p = 3, n = 1, d = 2, j = 0;
    int checked = 0;
    std::vector<std::string> rewriting_failures;  // image of the rewriting route outside N
    std::vector<std::string> route_mismatches;    // Rewriting vs Product
    std::vector<std::string> functorial_escapes;  // exact action outside N
    bool closed() const { return rewriting_failures.empty() && route_mismatches.empty(); }
};
StabilityReport stability_check(int p, int n, int d, int j);

struct CrossCheck {
    int p = 3, n = 1, d = 2, j = 0, box = 0;
    std::vector<int> symbol_layers, cech_layers;
    bool agree() const { return symbol_layers == cech_layers; }
};
// Layer ranks of the symbols V^l([z^u]), |u_i| <= box, against the Cech
// cohomology of the complement cover {D+(z_i) : i > j} monomial by monomial.
CrossCheck small_case_crosscheck(int p, int d, int j, int n, int box);

}  // namespace witt
