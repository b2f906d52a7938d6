#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "witt/linalg.hpp"
#include "witt/rings.hpp"

using namespace witt;

TEST_CASE("laurent examples") {
    Laurent z0 = Laurent::monomial(3, 1, {1, 0}, 1, 1u);
    Laurent z0i = Laurent::monomial(3, 1, {-1, 0}, 1, 1u);
    CHECK(z0 * z0i == Laurent::constant(3, 1, 2, 1, 1u));

    Laurent z = Laurent::monomial(2, 1, {1});
    Laurent one = Laurent::constant(2, 1, 1, 1);
    CHECK((z + one) * (z + one) == Laurent::monomial(2, 1, {2}) + one);

    Laurent a = Laurent::monomial(5, 1, {2, -1}, 1, 2u), b = Laurent::monomial(5, 1, {0, -1}, 1, 2u);
    CHECK(a * b == Laurent::monomial(5, 1, {2, -2}, 1, 2u));

    CHECK_THROWS_AS(Laurent::monomial(3, 1, {-1, 0}, 1, 2u), Error);
}

TEST_CASE("laurent ring axioms on random triples") {
    Rng rng(11);
    for (int p : {2, 3, 5}) {
        for (int t = 0; t < 50; ++t) {
            Laurent a = random_poly(rng, p, 2, 2, 4, 3), b = random_poly(rng, p, 2, 2, 4, 3),
                    c = random_poly(rng, p, 2, 2, 4, 3);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) - b == a);
        }
    }
}

TEST_CASE("F_p elements satisfy a^p = a") {
    for (int p : {2, 3, 5, 7})
        for (int a = 0; a < p; ++a) {
            Laurent x = Laurent::constant(p, 1, 0, a);
            CHECK(x.pow(p) == x);
        }
}

TEST_CASE("graded basis") {
    auto s = graded_basis(2, 1, {{0, 1}, {0, 1}});
    CHECK(s.basis == std::vector<Exp>{{0, 1}, {1, 0}});
    s = graded_basis(2, 0, {{-1, 1}, {-1, 1}});
    CHECK(s.basis == std::vector<Exp>{{-1, 1}, {0, 0}, {1, -1}});
    s = graded_basis(3, 2, {{0, 2}, {0, 2}, {0, 2}});
    CHECK(s.basis.size() == 6);
    // stars and bars, box not binding
    for (int d = 1; d <= 4; ++d)
        for (int m = 0; m <= 5; ++m) {
            std::vector<std::pair<int, int>> box(d, {0, m});
            int64_t expect = binom_mod(m + d - 1, d - 1, 1000000007);
            CHECK(static_cast<int64_t>(graded_basis(d, m, box).basis.size()) == expect);
        }
}

TEST_CASE("generalized binomials") {
    CHECK(binom_mod(-1, 1, 3) == 2);
    CHECK(binom_mod(-1, 5, 7) == 6);
    CHECK(binom_mod(-2, 2, 100) == 3);
    CHECK(binom_mod(6, 2, 4) == 3);
    CHECK(binom_mod(3, 5, 7) == 0);
    CHECK(binom_val(4, 2, 2) == 1);
    CHECK(binom_val(8, 2, 2) == 2);
}

TEST_CASE("smith normal form") {
    MatZ a(2, 2);
    a << 2, 4, 6, 8;
    auto s = smith_normal_form(a);
    REQUIRE(s.rank() == 2);
    CHECK(s.diag[0] * s.diag[1] == 8);
    CHECK(s.diag[0] == 2);
    MatZ b(3, 3);
    b << 1, 1, 0, 0, 1, 1, 1, 0, 1;
    CHECK(rank_mod_p(b, 2) == 2);
    CHECK(rank_mod_p(b, 3) == 3);
    CHECK(image_length(b, 2, 2) == 5);  // determinant 2: Z/4^3 image has index 2
}
