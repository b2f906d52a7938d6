#pragma once

#include "witt/rings.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace witt {

// Sum of c * z^e d^{[r]} over Z/p^k in m variables; z exponents may be
// negative in the variables of `neg`, orders are componentwise >= 0.
struct WeylElement {
    int p = 2, k = 1, m = 1;
    uint32_t neg = 0;
    std::map<std::pair<Exp, Exp>, int64_t> terms;

    WeylElement() = default;
    WeylElement(int p_, int k_, int m_, uint32_t neg_ = 0) : p(p_), k(k_), m(m_), neg(neg_) {}

    static WeylElement identity(int p, int k, int m, uint32_t neg = 0);
    static WeylElement z_power(int p, int k, int m, int var, int e, uint32_t neg = 0);
    static WeylElement d_power(int p, int k, int m, int var, int r, uint32_t neg = 0);
    static WeylElement term(int p, int k, const Exp& e, const Exp& r, int64_t c = 1, uint32_t neg = 0);

    int64_t mod() const { return ipow(p, k); }
    void add_term(const Exp& e, const Exp& r, int64_t c);
    int max_order() const;
    bool is_zero() const { return terms.empty(); }

    WeylElement operator+(const WeylElement& o) const;
    WeylElement operator-(const WeylElement& o) const;
    WeylElement scaled(int64_t c) const;
    WeylElement operator*(const WeylElement& o) const;  // composition, Leibniz rule
    bool operator==(const WeylElement& o) const { return p == o.p && k == o.k && m == o.m && terms == o.terms; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }

    WeylElement with_modulus(int k2) const;  // reduce or lift residues
    std::string str() const;
};

// d^{[r]}(z^a) = binom(a, r) z^{a-r}, generalized binomial for a < 0.
Laurent apply(const WeylElement& op, const Laurent& f);

struct WeylGen {
    int var = 0;
    bool is_d = false;
    int power = 1;  // z^power (may be negative) or d^{[power]}
    int64_t coeff = 1;  // pure scalar factor when var < 0
};
using WeylWord = std::vector<WeylGen>;

// Tokens: z, z0, z1^-2, d, d1, d^[3], d0^[2], integers.
WeylWord parse_word(const std::string& s, int m);
// Left normalization with the rewrite
// d^{[r]} z = d^{[r-1]} + z d^{[r]},  d^{[r]} d^{[s]} = binom(r+s, r) d^{[r+s]}.
WeylElement normal_form(const WeylWord& w, int p, int k, int m, uint32_t neg = 0);
// Sequential application of the word to f, rightmost generator first.
Laurent apply_word(const WeylWord& w, const Laurent& f);

// theta^{(n)}_{ij} = z^i d^{[p^n - 1]} z^{p^n - 1 - j}
WeylElement theta(int p, int n, const Exp& i, const Exp& j);

// (z^2 d)^{[s]} = sum_i binom(s-1, i) z^{2s-i} d^{[s-i]} in one variable.
WeylElement z2d_divided(int p, int k, int s);

// y_{il}^{[r]} = z_i^r d_l^{[r]} in homogeneous coordinates z_0..z_d.
WeylElement y_homogeneous(int p, int k, int d, int i, int l, int r);
// y_{il}^{[r]} in chart `chart`; chart coordinates are z_c / z_chart for
// c != chart, in increasing c.
WeylElement y_operator(int p, int k, int d, int i, int l, int r, int chart);
// A chart operator rewritten homogeneously (acts on degree-0 functions).
WeylElement chart_to_homogeneous(const WeylElement& op, int chart);
// Chart form of a degree-preserving homogeneous operator of order <= max_order.
WeylElement homogeneous_to_chart(const WeylElement& hop, int chart, int max_order);

struct GlobalityReport {
    bool global = false;
    bool stable = true;  // same verdict at bound and 2*bound
    int bound = 0;
};
// Tests whether `op`, given in chart `chart` of P^d, maps every chart's
// polynomial ring into itself, on monomials of degree <= bound.
GlobalityReport is_global(const WeylElement& op, int d, int chart, int bound = 0);
bool is_global_homogeneous(const WeylElement& hop, int d, int bound);

}  // namespace witt
