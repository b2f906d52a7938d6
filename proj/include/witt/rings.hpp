#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace witt {

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

using Exp = std::vector<int>;
using Rng = std::mt19937_64;

int64_t ipow(int64_t b, int e);
int64_t pmod(int64_t a, int64_t m);
int vp(int64_t x, int p);  // x != 0
bool is_prime(int64_t p);

// binom(m, r) for any integer m (falling factorial / r!), reduced mod `mod`.
int64_t binom_mod(int64_t m, int64_t r, int64_t mod);
// p-adic valuation of binom(m, r), or -1 when it vanishes.
int binom_val(int64_t m, int64_t r, int p);

// Sparse Laurent polynomial over Z/p^k in nvars variables; only variables in
// `neg` may carry negative exponents.  Terms are kept sorted lexicographically.
struct Laurent {
    int p = 2;
    int k = 1;
    int nvars = 0;
    uint32_t neg = 0;
    std::vector<std::pair<Exp, int64_t>> terms;

    Laurent() = default;
    Laurent(int p_, int k_, int nvars_, uint32_t neg_ = 0) : p(p_), k(k_), nvars(nvars_), neg(neg_) {}

    static Laurent constant(int p, int k, int nvars, int64_t c, uint32_t neg = 0);
    static Laurent monomial(int p, int k, const Exp& e, int64_t c = 1, uint32_t neg = 0);

    int64_t mod() const { return ipow(p, k); }
    bool is_zero() const { return terms.empty(); }
    bool is_monomial() const { return terms.size() == 1; }
    int64_t coeff(const Exp& e) const;
    Laurent zero_like() const { return Laurent(p, k, nvars, neg); }
    Laurent one_like() const { return constant(p, k, nvars, 1, neg); }

    void normalize();  // sort, merge, reduce, strip zeros
    void check_exp(const Exp& e) const;

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator-() const;
    Laurent operator*(const Laurent& o) const;
    Laurent scaled(int64_t c) const;
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    bool operator==(const Laurent& o) const;
    bool operator!=(const Laurent& o) const { return !(*this == o); }
    bool operator<(const Laurent& o) const;

    Laurent pow(int64_t e) const;
    // p^m-th power, exploiting that only the residue mod p matters mod p^{m+1}
    Laurent pow_p(int m) const;
    Laurent with_modulus(int k2) const;  // reduce (k2 <= k) or lift residues (k2 > k)
    Laurent with_neg(uint32_t neg2) const;
    Laurent div_p() const;                // all coefficients divisible by p
    Laurent map_exponents(int mul) const; // e -> mul*e
    bool exps_divisible(int64_t q) const;
    Laurent exps_divided(int64_t q) const;
    int max_abs_exp() const;

    std::string str() const;
};

void require_compatible(const Laurent& a, const Laurent& b);

Laurent random_poly(Rng& rng, int p, int k, int nvars, int max_terms, int max_deg);

// Lex-sorted exponent vectors of total degree m inside box [lo_i, hi_i].
struct GradedSlice {
    int degree = 0;
    std::vector<std::pair<int, int>> box;
    std::vector<Exp> basis;
};
GradedSlice graded_basis(int d, int m, const std::vector<std::pair<int, int>>& box);

}  // namespace witt
