#pragma once

#include "witt/linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace witt {

// Invertible (d+1) x (d+1) matrices over F_q, row-major.
struct FiniteGL {
    int q = 2, size = 2;
    std::vector<std::vector<int>> elements;
    static int64_t order_formula(int q, int size);  // prod_i (q^N - q^i)
};
FiniteGL enumerate_gl(int q, int size);

// Simple roots Delta = {0, .., size-2}; root i joins positions i and i+1.
// A subset I is a bitmask; P_I is generated by B and the s_i, i in I.
using RootSet = uint32_t;
RootSet parse_roots(const std::string& s, int size);  // "0,1" or ""
std::string roots_str(RootSet I);

// A coset g P_I, stored as the partial flag of column spans of g cut at
// the positions k with k-1 not in I; each subspace in reduced echelon form.
using Flag = std::vector<int>;
Flag flag_of(const std::vector<int>& g, int q, int size, RootSet I);

struct ParabolicCosets {
    int q = 2, size = 2;
    RootSet I = 0;
    std::vector<Flag> cosets;  // sorted
    int64_t parabolic_order = 0;
    bool partition_ok = false;  // every coset met |P_I| times
};
ParabolicCosets parabolic_cosets(const FiniteGL& G, RootSet I);
// Gaussian multinomial [size]_q! / prod [block]_q!
int64_t flag_count(int q, int size, RootSet I);
// Cosets from flags alone (no group enumeration).
std::vector<Flag> enumerate_flags(int q, int size, RootSet I);

enum class CoeffRing { Z, Zpn };

struct InductionComplex {
    int q = 2, size = 2;
    RootSet I = 0;
    CoeffRing ring = CoeffRing::Z;
    int p = 2, n = 1;  // Z/p^n when ring = Zpn
    // term s is the sum over J, I <= J <= Delta, |Delta \ J| = s, of Z[G/P_J]
    std::vector<std::vector<RootSet>> parts;
    std::vector<int> dims;
    std::vector<MatZ> diff;  // diff[s]: term s -> term s+1, dims[s+1] x dims[s]
    bool d_squared_zero = false;
};
InductionComplex build_complex(int q, int d, RootSet I, CoeffRing ring = CoeffRing::Z, int n = 1);

struct AcyclicityReport {
    CoeffRing ring = CoeffRing::Z;
    int p = 2, n = 1;
    std::vector<std::string> homology;  // interior and initial terms, "0" when exact
    bool exact = false;
    int cokernel_rank = 0;
    std::vector<int> cokernel_layers;  // Z/p^n: p-adic layer dims of the cokernel
    std::vector<int64_t> torsion;      // Z: invariant factors > 1 of the last map
    bool cokernel_free = false;
    int euler = 0;                     // alternating sum of the dims, cokernel included
};
AcyclicityReport acyclicity_check(const InductionComplex& cx);

struct SteinbergRank {
    int rank = 0;
    int alternating_sum = 0;
    bool free = false;
};
SteinbergRank steinberg_rank(int q, int d, RootSet I);

}  // namespace witt
