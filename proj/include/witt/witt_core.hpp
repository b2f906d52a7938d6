#pragma once

#include "witt/rings.hpp"

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <vector>

namespace witt {

// Integer polynomial in at most 8 variables, exponents packed 8 bits each.
struct UPoly {
    int nvars = 0;
    std::vector<std::pair<uint64_t, mpz_class>> terms;  // sorted by packed key

    static int exp_of(uint64_t key, int v) { return static_cast<int>(key >> (8 * v) & 0xffu); }
    static uint64_t key_of(const std::vector<int>& e);
    int max_coeff_bits() const;
    std::string str() const;
};

struct ReducedPoly {  // coefficients mod p
    int nvars = 0;
    std::vector<std::pair<std::array<uint8_t, 8>, int64_t>> terms;
    std::array<int, 8> max_exp{};
};

struct UniversalWittPolys {
    int p = 2, n = 1;
    std::vector<UPoly> sum, prod, neg;  // S_k in X_1..X_n,Y_1..Y_n (vars 0..2n-1); I_k in X (vars 0..n-1)
    std::vector<ReducedPoly> sum_r, prod_r, neg_r;
};

// Ghost recursion with a hard integrality check (throws IntegralityFailure).
UniversalWittPolys build_universal_polys(int p, int n);
// Write-once cache, safe for concurrent readers.
const UniversalWittPolys& universal_polys(int p, int n);
// Recomputes ghost_k(S) = ghost_k(X) + ghost_k(Y) etc. as integer polynomial identities.
bool verify_ghost_symbolic(const UniversalWittPolys& u, std::string* why = nullptr);

// Witt vector of length c.size() over F_p[z^{+-}]; every coordinate is a
// Laurent with k = 1 and a common variable count.  nvars = 0 gives W_n(F_p).
struct WittVec {
    int p = 2;
    std::vector<Laurent> c;
    int vars = 0;  // kept for length-0 vectors

    int n() const { return static_cast<int>(c.size()); }
    int nvars() const { return c.empty() ? vars : c[0].nvars; }
    uint32_t negmask() const;
    bool is_zero() const;
    bool operator==(const WittVec& o) const { return p == o.p && c == o.c; }
    bool operator!=(const WittVec& o) const { return !(*this == o); }
    std::string str() const;
};

WittVec wzero(int p, int n, int nvars, uint32_t neg = 0);
WittVec wone(int p, int n, int nvars, uint32_t neg = 0);
WittVec teichmuller(const Laurent& a, int n);
WittVec wscalar(int p, int n, int64_t c);  // image of c under Z -> W_n(F_p)

// Ring operations.  Scalars (nvars = 0) specialize the universal polynomials;
// polynomial coordinates go through the injective lift w~ (see witt_core.cpp).
WittVec wadd(const WittVec& x, const WittVec& y);
WittVec wsub(const WittVec& x, const WittVec& y);
WittVec wneg(const WittVec& x);
WittVec wmul(const WittVec& x, const WittVec& y);
WittVec wint(int64_t c, const WittVec& x);

WittVec wadd_universal(const WittVec& x, const WittVec& y);
WittVec wmul_universal(const WittVec& x, const WittVec& y);
WittVec wneg_universal(const WittVec& x);
WittVec wadd_lift(const WittVec& x, const WittVec& y);
WittVec wmul_lift(const WittVec& x, const WittVec& y);
WittVec wneg_lift(const WittVec& x);

WittVec frobenius(const WittVec& x);     // length n-1
WittVec verschiebung(const WittVec& x);  // length n+1
WittVec vshift(const WittVec& x, int i, int n_out);  // V^i, truncated/padded to n_out
WittVec restrict_w(const WittVec& x, int times = 1);
WittVec phi(const WittVec& x);           // coordinatewise p-th power, same length
// x = sum_l V^l([x_{l+1}])
std::vector<WittVec> decompose(const WittVec& x);

// Ghost components over Z of an integer Witt vector.
std::vector<mpz_class> ghost(const std::vector<mpz_class>& a, int p);
// W_n(F_p) -> Z/p^n
int64_t witt_to_int(const WittVec& x);

// w~ for a length N vector: sum_i p^i lift(x_{i+1})^{p^{N-1-i}} in (Z/p^N)[z].
Laurent tilde_w(const WittVec& x);
WittVec tilde_w_inverse(const Laurent& y, int p);  // throws NotInImage
// F~ for a length n vector: sum_i p^i lift(x_{i+1})^{p^{n-i}} in (Z/p^n)[z].
Laurent tilde_F(const WittVec& x);
// Formal derivative in variable v (closedness test for tilde_F).
Laurent formal_derivative(const Laurent& f, int v);

int64_t teich_digit(int64_t c, int p, int k);  // omega(c) mod p^k

// Monomial expansion x = sum coeff * V^level([z^e]).
struct MonoTerm {
    int level = 0;
    Exp e;
    int64_t coeff = 0;  // mod p^{n - level}
    bool operator<(const MonoTerm& o) const {
        return level != o.level ? level < o.level : e < o.e;
    }
    bool operator==(const MonoTerm& o) const { return level == o.level && e == o.e && coeff == o.coeff; }
};
std::vector<MonoTerm> monomial_expand(const WittVec& x);
WittVec monomial_recompose(const std::vector<MonoTerm>& terms, int p, int n, int nvars, uint32_t neg);

// [a_1 + ... + a_r]^i as sum coeff * V^l(prod [a_j]^{m_j}) with sum m = p^l i.
struct TeichSumTerm {
    int level = 0;
    std::vector<int> m;
    int64_t coeff = 0;
};
std::vector<TeichSumTerm> teichmuller_sum_power(const std::vector<Laurent>& summands, int i, int n);
WittVec teich_sum_recompose(const std::vector<TeichSumTerm>& terms, const std::vector<Laurent>& summands, int n);

struct VProduct {
    int64_t scalar = 1;  // p^{sum of the non-maximal s_i}
    int level = 0;
    Exp exponent;
};
VProduct v_product_normalize(int p, const std::vector<std::pair<int, Exp>>& factors);

WittVec random_witt(Rng& rng, int p, int n, int nvars, int max_terms, int max_deg);

}  // namespace witt
