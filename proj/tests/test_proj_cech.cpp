#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "witt/proj_cech.hpp"

using namespace witt;

TEST_CASE("classical cohomology") {
    CHECK(classical_cohomology(1, 2, 0) == 3);
    CHECK(classical_cohomology(2, -3, 2) == 1);
    for (int i = 0; i <= 2; ++i) CHECK(classical_cohomology(2, -1, i) == 0);
    for (int d = 1; d <= 3; ++d)
        for (int m = -8; m <= 6; ++m)
            for (int i = 0; i <= d; ++i) CHECK(classical_cohomology_cech(d, m, i) == classical_cohomology(d, m, i));
}

TEST_CASE("short exact sequence on cochains") {
    Rng rng(4);
    int p = 3, d = 1, n = 2;
    for (int t = 0; t < 20; ++t) {
        WittCochain c;
        for (uint32_t I : subsets_of_size(d, 1)) {
            Laurent f(p, 1, d + 1, I);
            for (int j = 0; j < 3; ++j) {
                int e0 = static_cast<int>(rng() % 5) - 2;
                Exp e = {e0, -3 - e0};
                if ((e[0] < 0 && !(I & 1u)) || (e[1] < 0 && !(I & 2u))) continue;
                f += Laurent::monomial(p, 1, e, 1 + rng() % 2, I);
            }
            c[I] = teichmuller(f, n - 1);
        }
        Cochain r = ses_R(ses_V(c));
        CHECK(r.empty());
        for (const auto& [I, x] : ses_V(c)) CHECK(is_witt_section(x, I, -1));
    }
    // R of a Teichmuller cochain is its first coordinate; V of [g] is (0, g)
    Laurent g = Laurent::monomial(2, 1, {2, -1}, 1, 2u);
    Cochain one{{2u, g}};
    CHECK(ses_R(teichmuller_cochain(one, 3)) == one);
    CHECK(ses_V(teichmuller_cochain(one, 1)).at(2u).c[1] == g);
    CHECK(ses_V(teichmuller_cochain(one, 1)).at(2u).c[0].is_zero());
}

TEST_CASE("classical classes") {
    int p = 3, d = 2;
    Cochain top = classical_representative({-1, -1, -2}, d, d, p);
    ClassicalClass cls = classical_class(top, d, d, p);
    CHECK(cls.coords.size() == 1);
    Rng rng(9);
    // coboundaries of random degree-0 cochains reduce to zero with an explicit primitive
    for (int t = 0; t < 20; ++t) {
        Cochain h;
        for (uint32_t I : subsets_of_size(d, 1)) {
            int i = __builtin_ctz(I);
            Exp e(3, 0);
            e[(i + 1) % 3] = static_cast<int>(rng() % 3);
            e[(i + 2) % 3] = static_cast<int>(rng() % 3);
            e[i] = -e[(i + 1) % 3] - e[(i + 2) % 3];
            h[I] = Laurent::monomial(p, 1, e, 1 + rng() % 2, I);
        }
        Cochain c = cech_differential(h, d, 0);
        ClassicalClass k = classical_class(c, d, 1, p);
        CHECK(k.coords.empty());
        Cochain back = cech_differential(k.h, d, 0);
        CHECK(back == c);
    }
    Cochain bad{{1u, Laurent::monomial(p, 1, {1, 0, 0}, 1, 1u)}};
    CHECK_THROWS_AS(classical_class(bad, d, 0, p), Error);
}

TEST_CASE("connecting maps vanish and are representative independent") {
    for (int p : {2, 3})
        for (int d = 1; d <= 2; ++d)
            for (int a = -4; a <= 3; ++a)
                for (int k = 0; k <= d; ++k) CHECK(connecting_map(d, k, p, 2, a).rank() == 0);
    // a lifted coboundary has zero class even though [x + y] != [x] + [y]
    Rng rng(12);
    int p = 2, d = 2, n = 3, nontrivial = 0;
    for (int t = 0; t < 10; ++t) {
        Cochain h;
        for (uint32_t I : subsets_of_size(d, 1)) {
            Laurent f(p, 1, 3, I);
            int i = __builtin_ctz(I);
            for (int j = 0; j < 3; ++j) {
                Exp e(3, 0);
                e[(i + 1) % 3] = static_cast<int>(rng() % 3);
                e[(i + 2) % 3] = static_cast<int>(rng() % 3);
                e[i] = -2 - e[(i + 1) % 3] - e[(i + 2) % 3];
                f += Laurent::monomial(p, 1, e, 1, I);
            }
            h[I] = f;
        }
        Cochain c = cech_differential(h, d, 0);
        WittCochain w = connecting_cocycle(c, d, 1, p, n);
        nontrivial += !w.empty();
        // the target H^2(W_2 O(-4)) is nonzero, so this is a genuine coboundary test
        CHECK(witt_class_lead(w, d, 2, p, n - 1, -4).layer == -1);
    }
    CHECK(nontrivial > 5);
    CHECK(witt_cohomology(p, d, n - 1, -4).degrees[2].length() > 0);
    // a cocycle that is not a coboundary is detected at the right layer
    Cochain top = classical_representative({-1, -1, -2}, d, d, p);
    CHECK(witt_class_lead(teichmuller_cochain(top, 2), d, 2, p, 2, -4).layer == 0);
    CHECK(witt_class_lead(ses_V(teichmuller_cochain(classical_representative({-2, -3, -3}, d, d, p), 1)), d, 2, p, 2, -4).layer == 1);
}

TEST_CASE("line bundle cohomology examples") {
    auto h = witt_cohomology(2, 1, 2, -1);
    CHECK(h.degrees[1].layers == std::vector<int>{0, 1});
    h = witt_cohomology(2, 1, 2, -2);
    CHECK(h.degrees[1].layers == std::vector<int>{1, 3});
    CHECK(h.degrees[1].length() == 4);
    CHECK(witt_cohomology(2, 2, 2, -1).degrees[2].length() == 0);
    auto s = witt_structure_sheaf_cohomology(2, 1, 3);
    CHECK(s.degrees[0].layers == std::vector<int>{1, 1, 1});
    CHECK(s.degrees[1].length() == 0);
    s = witt_structure_sheaf_cohomology(3, 2, 2);
    CHECK(s.degrees[0].length() == 2);
    CHECK(s.degrees[1].length() + s.degrees[2].length() == 0);
}

TEST_CASE("sweep agrees with closed forms") {
    for (int p : {2, 3})
        for (int n = 1; n <= 3; ++n)
            for (int d = 1; d <= 2; ++d)
                for (int a = -4; a <= 4; ++a) {
                    auto h = witt_cohomology(p, d, n, a);
                    auto c = witt_cohomology_closed_form(p, d, n, a);
                    for (int i = 0; i <= d; ++i) CHECK(h.degrees[i] == c[i]);
                }
}
