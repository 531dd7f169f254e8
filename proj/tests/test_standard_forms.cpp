#include <doctest.h>

#include "latemb/error.hpp"
#include "latemb/standard_forms.hpp"

using namespace latemb;

TEST_CASE("diag_form") {
    CHECK(diag_form(1, 0) == GramMatrix::diagonal({Int(1)}));
    CHECK(diag_form(2, 3) ==
          GramMatrix::diagonal({Int(1), Int(1), Int(-1), Int(-1), Int(-1)}));
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q) {
            if (p + q < 1) continue;
            CHECK(invariants(diag_form(p, q)) == FormInvariants{p, q, Parity::odd});
        }
}

TEST_CASE("hyperbolic_sum") {
    const GramMatrix h = hyperbolic_sum(1);
    CHECK(h.at(0, 0) == 0);
    CHECK(h.at(0, 1) == 1);
    CHECK(h.at(1, 0) == 1);
    CHECK(h.at(1, 1) == 0);
    CHECK(hyperbolic_sum(2).rank() == 4);
    CHECK(hyperbolic_sum(2) == direct_sum(hyperbolic_sum(1), hyperbolic_sum(1)));
    for (int n = 1; n <= 5; ++n) {
        CHECK(invariants(hyperbolic_sum(n)) == FormInvariants{n, n, Parity::even});
        CHECK(signature(hyperbolic_sum(n)) == Inertia{n, 0, n});
    }
}

TEST_CASE("e8_form is the fixed rank-8 even definite unimodular form") {
    const GramMatrix e8 = e8_form(Sign::plus);
    CHECK(e8.rank() == 8);
    for (int i = 0; i < 8; ++i) CHECK(e8.at(i, i) == 2);
    for (int i = 0; i + 1 < 7; ++i) CHECK(e8.at(i, i + 1) == 1);
    CHECK(e8.at(4, 7) == 1); // the last node hangs off position 5
    CHECK(e8.at(7, 4) == 1);
    CHECK(e8.at(6, 7) == 0);
    CHECK(determinant(e8) == 1);
    CHECK(parity(e8) == Parity::even);
    CHECK(signature(e8) == Inertia{8, 0, 0});

    const GramMatrix neg = e8_form(Sign::minus);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) CHECK(neg.at(i, j) == -e8.at(i, j));
    CHECK(invariants(neg) == FormInvariants{0, 8, Parity::even});
}

TEST_CASE("validate_invariants") {
    CHECK(!invariants_error({3, 19, Parity::even})); // sig -16
    CHECK(!invariants_error({2, 3, Parity::odd}));
    const auto err = invariants_error({2, 3, Parity::even});
    REQUIRE(err.has_value());
    CHECK(err->find("multiple of 8") != std::string::npos);
    CHECK_THROWS_AS(validate_invariants({2, 3, Parity::even}), Error);
}

TEST_CASE("serre_normal_form fixed cases") {
    const GramMatrix k3 = serre_normal_form({3, 19, Parity::even});
    CHECK(k3.rank() == 22);
    GramMatrix expected = direct_sum(e8_form(Sign::minus), e8_form(Sign::minus));
    expected = direct_sum(expected, hyperbolic_sum(3));
    CHECK(k3 == expected);

    CHECK(serre_normal_form({1, 1, Parity::even}) == hyperbolic_sum(1));
    CHECK(serre_normal_form({2, 1, Parity::odd}) == diag_form(2, 1));
    CHECK_THROWS_AS(static_cast<void>(serre_normal_form({2, 3, Parity::even})), Error);
    CHECK_THROWS_AS(static_cast<void>(serre_normal_form({0, 0, Parity::even})), Error);
}

TEST_CASE("normal form round-trips its invariants on the full grid") {
    for (int p = 0; p <= 40; ++p)
        for (int q = 0; p + q <= 40; ++q) {
            if (p + q < 1) continue;
            const FormInvariants odd{p, q, Parity::odd};
            CHECK(invariants(serre_normal_form(odd)) == odd);
            if ((p - q) % 8 == 0) {
                const FormInvariants even{p, q, Parity::even};
                CHECK(invariants(serre_normal_form(even)) == even);
            }
        }
}
