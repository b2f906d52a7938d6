#pragma once

#include "witt/rings.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace witt {

// r_j = u_j p^{v_j} with p not dividing u_j; u_j = 0 marks r_j = 0.
struct Weight {
    int p = 2;
    std::vector<std::pair<int64_t, int>> r;

    static Weight from_fractions(int p, const std::vector<int64_t>& num, int denom_exp);  // r_j = num_j / p^denom_exp
    int d() const { return static_cast<int>(r.size()); }
    bool in_support(int j) const { return r[j].first != 0; }
    std::vector<int> support() const;  // ascending valuation, ties by index
    Weight restricted(const std::vector<int>& idx) const;
    Weight scaled_p(int m) const;  // p^m r
    int t() const;
    int u() const { return std::max(0, t()); }
    bool integral() const { return t() <= 0; }
    bool admissible(int n) const { return t() <= n - 1; }  // p^{n-1} r integral
    std::string str() const;
    bool operator<(const Weight& o) const { return r < o.r; }
    bool operator==(const Weight& o) const { return r == o.r; }
};

std::pair<int, int> t_and_u(const Weight& r, const std::vector<int>& subset);

// (I_0, ..., I_i), each part listed in support order.
struct Partition {
    std::vector<std::vector<int>> parts;
    int degree() const { return static_cast<int>(parts.size()) - 1; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    std::string str() const;
};

std::vector<Partition> enumerate_partitions(const Weight& r, int i);
bool valid_partition(const Weight& r, const Partition& P);

struct DRWElement {
    int p = 2, n = 1, degree = 0;
    std::map<std::pair<Weight, Partition>, int64_t> terms;  // coefficients mod p^n

    int64_t mod() const { return ipow(p, n); }
    void add(const Weight& r, const Partition& P, int64_t c);
    bool is_zero() const { return terms.empty(); }
    DRWElement scaled(int64_t c) const;
    bool operator==(const DRWElement& o) const {
        return p == o.p && n == o.n && degree == o.degree && terms == o.terms;
    }
    bool operator!=(const DRWElement& o) const { return !(*this == o); }
    std::string str() const;
};

DRWElement basis_element(int p, int n, const Weight& r, const Partition& P);  // throws Inadmissible

enum class DRWOp { F, V, d };
DRWOp parse_drw_op(const std::string& s);
DRWElement act(DRWOp which, const DRWElement& x);

struct BasisKey {
    Weight r;
    Partition P;
};
// Weights r = a / p^{n-1} with 0 <= a_j <= bound.
std::vector<BasisKey> enumerate_basis(int p, int n, int d, int i, int bound);

struct DRWIdentityReport {
    int elements = 0;
    std::vector<std::string> failures;  // identity name and element
    bool ok() const { return failures.empty(); }
};
// d^2 = 0, FV = VF = p, FdV = d, Vd = pdV, dF = pFd on every basis element.
DRWIdentityReport check_drw_identities(int p, int n, int d, int i, int bound);

}  // namespace witt
