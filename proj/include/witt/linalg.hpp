#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace witt {

using MatZ = Eigen::Matrix<int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<int64_t, Eigen::Dynamic, 1>;

// Row echelon form over F_p; returns rank.
int rank_mod_p(MatZ a, int64_t p);

// Solve a x = b over F_p; false if inconsistent.
bool solve_mod_p(const MatZ& a, const VecZ& b, int64_t p, VecZ& x);

struct SmithForm {
    std::vector<int64_t> diag;  // nonzero invariant factors
    int rank() const { return static_cast<int>(diag.size()); }
    bool unimodular() const;   // all invariant factors are +-1
};

// Smith normal form over Z (int64 with overflow checks).
SmithForm smith_normal_form(MatZ a);

// Elementary divisor valuations of a over Z/p^n: the image is
// isomorphic to the sum of Z/p^{n-e_i}.  Entries e_i < n only.
std::vector<int> local_smith(MatZ a, int64_t p, int n);

// Length of the image of a: (Z/p^n)^cols -> (Z/p^n)^rows.
int image_length(const MatZ& a, int64_t p, int n);

}  // namespace witt
