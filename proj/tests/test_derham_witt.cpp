#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "witt/derham_witt.hpp"

#include <set>

using namespace witt;

static Weight W(int p, std::vector<int64_t> num, int den = 0) { return Weight::from_fractions(p, num, den); }

static Partition part(std::vector<std::vector<int>> parts) { return Partition{parts}; }

TEST_CASE("t and u") {
    CHECK(t_and_u(W(3, {1}), {0}) == std::make_pair(0, 0));
    CHECK(t_and_u(W(3, {1}, 1), {0}) == std::make_pair(1, 1));
    CHECK(t_and_u(W(3, {9}), {0}) == std::make_pair(-2, 0));
    CHECK(W(2, {1, 2}).integral());
    CHECK(!W(2, {1, 2}, 1).integral());
    CHECK(W(2, {3, 0, 6}, 1).t() == 1);
    CHECK(W(2, {3, 0, 6}, 1).str() == "(3/2, 0, 3)");
}

TEST_CASE("support order") {
    // valuations 1, 0, 0 -> indices 1, 2 first, then 0
    Weight r = W(2, {2, 1, 3});
    CHECK(r.support() == std::vector<int>{1, 2, 0});
    CHECK(r.scaled_p(3).support() == r.support());
    CHECK(r.scaled_p(-2).support() == r.support());
}

// every (i+1)-tuple of subsets satisfying the four conditions, by brute force
static int brute_partitions(const Weight& r, int i) {
    std::vector<int> s = r.support();
    int l = static_cast<int>(s.size());
    std::vector<int> pos(r.d(), -1);
    for (int k = 0; k < l; ++k) pos[s[k]] = k;
    int count = 0;
    std::vector<int> label(l, 0);
    while (true) {
        bool ok = true;
        for (int j = 1; j <= i; ++j)
            ok = ok && std::count(label.begin(), label.end(), j) > 0;
        for (int a = 0; a + 1 < l && ok; ++a) ok = label[a] <= label[a + 1];  // order and convexity
        if (ok) ++count;
        int k = 0;
        while (k < l && label[k] == i) label[k++] = 0;
        if (k == l) break;
        ++label[k];
    }
    return count;
}

TEST_CASE("partition counts") {
    CHECK(enumerate_partitions(W(3, {1, 1}), 1).size() == 2);
    CHECK(enumerate_partitions(W(3, {1, 1, 1}), 0).size() == 1);
    CHECK(enumerate_partitions(W(3, {1, 1, 1}), 3).size() == 1);
    CHECK(enumerate_partitions(W(3, {0, 0}), 0).size() == 1);
    CHECK_THROWS_AS(enumerate_partitions(W(3, {1, 0}), 2), Error);
    for (int l = 1; l <= 5; ++l) {
        std::vector<int64_t> num(l);
        for (int j = 0; j < l; ++j) num[j] = j + 1;
        Weight r = W(2, num);
        for (int i = 0; i <= l; ++i) {
            auto ps = enumerate_partitions(r, i);
            CHECK(static_cast<int>(ps.size()) == binom_mod(l, i, 1000000));
            CHECK(static_cast<int>(ps.size()) == brute_partitions(r, i));
            for (auto& P : ps) CHECK(valid_partition(r, P));
        }
    }
}

TEST_CASE("case formulas") {
    int p = 2;
    Weight one = W(p, {1}), half = W(p, {1}, 1), two = W(p, {2});
    DRWElement e0 = basis_element(p, 2, one, part({{0}}));
    CHECK(act(DRWOp::V, e0) == basis_element(p, 3, half, part({{0}})));
    DRWElement e1 = basis_element(p, 2, one, part({{}, {0}}));
    CHECK(act(DRWOp::F, e1) == basis_element(p, 1, two, part({{}, {0}})));
    CHECK(act(DRWOp::d, e1).is_zero());
    // d T^2 = 2 T dT = 2 F dT
    CHECK(act(DRWOp::d, basis_element(p, 2, two, part({{0}}))) == basis_element(p, 2, two, part({{}, {0}})).scaled(2));
    // V(T^p) = p T, so V carries a factor p for I_0 nonempty and r/p integral
    CHECK(act(DRWOp::V, basis_element(p, 2, two, part({{0}}))) == basis_element(p, 3, one, part({{0}})).scaled(2));
    // F V(T) = p T
    CHECK(act(DRWOp::F, basis_element(p, 2, half, part({{0}}))) == basis_element(p, 1, one, part({{0}})).scaled(2));
    CHECK_THROWS_AS(basis_element(p, 1, half, part({{0}})), Error);
    CHECK_THROWS_AS(basis_element(p, 2, one, part({{}, {}})), Error);
}

TEST_CASE("basis enumeration") {
    CHECK(enumerate_basis(3, 2, 2, 3, 5).empty());
    // level 1: classical forms x^{m - 1_J} dx_J with J inside supp(m), |J| = i
    for (int d = 1; d <= 3; ++d)
        for (int i = 0; i <= d; ++i) {
            auto basis = enumerate_basis(2, 1, d, i, 4);
            long classical = 0;
            std::vector<int> m(d, 0);
            while (true) {
                for (int J = 0; J < (1 << d); ++J) {
                    if (__builtin_popcount(J) != i) continue;
                    bool ok = true;
                    for (int v = 0; v < d; ++v)
                        if ((J >> v & 1) && m[v] == 0) ok = false;
                    classical += ok;
                }
                int v = 0;
                while (v < d && m[v] == 4) m[v++] = 0;
                if (v == d) break;
                ++m[v];
            }
            CHECK(static_cast<long>(basis.size()) == classical);
        }
    auto b = enumerate_basis(2, 2, 1, 0, 4);
    CHECK(b.size() == 5);
    CHECK(b[1].r == W(2, {1}, 1));
    std::set<std::pair<Weight, Partition>> seen;
    for (auto& k : enumerate_basis(3, 3, 3, 2, 6)) CHECK(seen.insert({k.r, k.P}).second);
}

TEST_CASE("de Rham-Witt identities") {
    for (int p : {2, 3})
        for (int n = 1; n <= 3; ++n)
            for (int d = 1; d <= 2; ++d)
                for (int i = 0; i <= d; ++i) {
                    DRWIdentityReport rep = check_drw_identities(p, n, d, i, p * p);
                    CHECK_MESSAGE(rep.ok(), rep.failures.front());
                    CHECK(rep.elements > 0);
                }
}
