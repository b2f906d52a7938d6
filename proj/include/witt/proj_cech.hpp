#pragma once

#include "witt/witt_core.hpp"

#include <map>
#include <string>
#include <vector>

namespace witt {

// F_p-dimensions of the graded pieces of a finite length Z/p^n-module.
struct FinLenModule {
    int p = 2, n = 1;
    std::vector<int> layers;
    int length() const;
    bool operator==(const FinLenModule& o) const { return p == o.p && n == o.n && layers == o.layers; }
};

// dim H^i(P^d, O(m)) from the closed binomial formulas.
long classical_cohomology(int d, int m, int i);
// The same dimension from the Cech complex, one monomial exponent at a time,
// inside the box |e_j| <= |m| + d + 1 (rechecked one step wider).
long classical_cohomology_cech(int d, int m, int i);

// Cech cochains on the standard cover of P^d: subset mask -> section over U_I.
using Cochain = std::map<uint32_t, Laurent>;
using WittCochain = std::map<uint32_t, WittVec>;

std::vector<uint32_t> subsets_of_size(int d, int size);
Cochain cech_differential(const Cochain& c, int d, int k);         // degree k -> k+1
WittCochain witt_cech_differential(const WittCochain& c, int d, int k, int p, int n);
WittCochain teichmuller_cochain(const Cochain& c, int n);
// Coordinate l of every section is homogeneous of degree p^l a with poles only in I.
bool is_witt_section(const WittVec& x, uint32_t I, int a);

// The short exact sequence 0 -> W_{n-1}O(pa) -V-> W_nO(a) -R^{n-1}-> O(a) -> 0 on cochains.
WittCochain ses_V(const WittCochain& c);
Cochain ses_R(const WittCochain& c);

// Class of a classical degree-k cocycle of O(m): coordinates on the monomial
// basis of H^k plus a cochain h with c - delta h = the basis representative.
struct ClassicalClass {
    std::map<Exp, int64_t> coords;
    Cochain h;
};
ClassicalClass classical_class(const Cochain& c, int d, int k, int p);  // throws NotACocycle
Cochain classical_representative(const Exp& e, int d, int k, int p);    // z^e as a cocycle

// Leading term of the class of a Witt cocycle along the V-filtration:
// layer -1 means coboundary.
struct WittClassLead {
    int layer = -1;
    std::map<Exp, int64_t> coords;
};
WittClassLead witt_class_lead(const WittCochain& z, int d, int k, int p, int n, int a);

// delta: H^k(O(a)) -> H^{k+1}(W_{n-1}O(pa)) applied to a classical cocycle.
WittCochain connecting_cocycle(const Cochain& c, int d, int k, int p, int n);

struct ConnectingMap {
    int k = 0;
    int source_dim = 0;
    std::vector<int> pivot_layers;  // one entry per independent image vector
    int rank() const { return static_cast<int>(pivot_layers.size()); }
};
ConnectingMap connecting_map(int d, int k, int p, int n, int a);

struct LineBundleCohomology {
    int p = 2, n = 1, d = 1, a = 0;
    std::vector<FinLenModule> degrees;  // i = 0..d, layers along the V-filtration
    std::vector<ConnectingMap> connecting;
};
LineBundleCohomology witt_cohomology(int p, int d, int n, int a);
LineBundleCohomology witt_structure_sheaf_cohomology(int p, int d, int n);
// Closed-form layer sums for comparison.
std::vector<FinLenModule> witt_cohomology_closed_form(int p, int d, int n, int a);

}  // namespace witt
