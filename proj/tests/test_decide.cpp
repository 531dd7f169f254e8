#include <doctest.h>

#include <random>

#include "latemb/decide.hpp"
#include "latemb/error.hpp"
#include "latemb/oracle.hpp"
#include "latemb/topology.hpp"

using namespace latemb;

namespace {

const FormInvariants kK3{3, 19, Parity::even};

CoveringStatus covering_at(const DecisionReport& report, const Int& d) {
    for (const auto& [degree, status] : report.covering)
        if (degree == d) return status;
    FAIL("degree not present in report");
    return CoveringStatus::unknown;
}

} // namespace

TEST_CASE("degree family membership and canonical bases") {
    CHECK(!DegreeFamily::none().contains(1));
    CHECK(DegreeFamily::every().contains(1));
    CHECK(DegreeFamily::every().contains(7));
    CHECK(!DegreeFamily::every().contains(0));
    CHECK(DegreeFamily::every_even().contains(2));
    CHECK(!DegreeFamily::every_even().contains(9));

    const DegreeFamily f = DegreeFamily::squares_of({Int(2), Int(4), Int(6)});
    CHECK(f.base == std::vector<Int>{2, 4, 6}); // no element is another times a square
    CHECK(f.contains(2));
    CHECK(f.contains(8));   // 2 * 2^2
    CHECK(f.contains(54));  // 6 * 3^2
    CHECK(f.contains(16));  // 4 * 2^2
    CHECK(!f.contains(10));
    CHECK(!f.contains(3));

    // canonical reduction drops square multiples of existing elements
    const DegreeFamily g = DegreeFamily::squares_of({Int(1), Int(4), Int(5), Int(45)});
    CHECK(g.base == std::vector<Int>{1, 5});
}

TEST_CASE("embeddable_any_d is the pair of inertia inequalities") {
    CHECK(embeddable_any_d(kK3, kK3));
    CHECK(!embeddable_any_d(kK3, {2, 30, Parity::odd}));
    CHECK(embeddable_any_d({2, 2, Parity::odd}, {2, 2, Parity::odd}));
    CHECK_THROWS_AS(static_cast<void>(embeddable_any_d({2, 3, Parity::even}, kK3)),
                    Error);
}

TEST_CASE("table rows select by parity and signature conditions") {
    CHECK(table_case({1, 1, Parity::odd}, {10, 10, Parity::odd}) == 2);
    CHECK(table_case({5, 5, Parity::odd}, {10, 9, Parity::odd}) == 1);
    CHECK(table_case({1, 0, Parity::odd}, {2, 2, Parity::even}) == 3);
    CHECK(table_case({1, 0, Parity::odd}, {9, 1, Parity::even}) == 4);
    CHECK(table_case({1, 1, Parity::even}, {3, 2, Parity::odd}) == 5);
    CHECK(table_case(kK3, {4, 20, Parity::odd}) == 6);
    CHECK(table_case({2, 2, Parity::even}, {10, 2, Parity::even}) == 7);
    CHECK(table_case(kK3, {3, 19, Parity::even}) == 8);
}

TEST_CASE("guaranteed_degrees per row") {
    // row 6: K3 against an odd target
    CHECK(guaranteed_degrees(kK3, {4, 20, Parity::odd}) ==
          DegreeFamily::squares_of({Int(2), Int(4), Int(6)}));
    // rows 1 + 2 union on the odd/odd cell
    CHECK(guaranteed_degrees({1, 1, Parity::odd}, {10, 10, Parity::odd}) ==
          DegreeFamily::squares_of({Int(1), Int(5)}));
    CHECK(guaranteed_degrees({5, 5, Parity::odd}, {9, 9, Parity::odd}) ==
          DegreeFamily::squares_of({Int(1)}));
    // row 7: signature-zero even source into an even target
    CHECK(guaranteed_degrees({2, 2, Parity::even}, {10, 2, Parity::even}) ==
          DegreeFamily::every());
    // rows 3 and 5: all even degrees
    CHECK(guaranteed_degrees({1, 0, Parity::odd}, {2, 2, Parity::even}) ==
          DegreeFamily::every_even());
    CHECK(guaranteed_degrees({1, 1, Parity::even}, {3, 2, Parity::odd}) ==
          DegreeFamily::every_even());
    // row 8
    CHECK(guaranteed_degrees(kK3, kK3) ==
          DegreeFamily::squares_of({Int(4), Int(8), Int(12)}));
    // not embeddable
    CHECK(guaranteed_degrees(kK3, {2, 30, Parity::odd}) == DegreeFamily::none());
}

TEST_CASE("degree_status") {
    CHECK(degree_status(kK3, {3, 19, Parity::even}, 4) == DegreeStatus::guaranteed);
    CHECK(degree_status({1, 1, Parity::odd}, {0, 1, Parity::odd}, 1) ==
          DegreeStatus::impossible); // inequality fails
    // parity obstruction: odd degree, odd source, even target
    CHECK(degree_status({1, 0, Parity::odd}, {1, 1, Parity::even}, 3) ==
          DegreeStatus::impossible);
    // ... confirmed by the bounded oracle on <1> -> H at degree 3
    const SearchOutcome oracle = brute_force_embedding(
        GramMatrix::diagonal({Int(1)}), hyperbolic_sum(1), 3, 10);
    CHECK(oracle.status == SearchOutcome::Status::none_bounded);

    CHECK(degree_status({2, 2, Parity::odd}, {2, 2, Parity::odd}, 7) ==
          DegreeStatus::unknown); // 7 outside squares_of({1}) (rank condition fails)
    CHECK_THROWS_AS(static_cast<void>(degree_status(kK3, kK3, 0)), Error);
}

TEST_CASE("degree_status never guarantees when the inequalities fail") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> b2(0, 12);
    int tested = 0;
    while (tested < 100) {
        FormInvariants n{b2(rng), b2(rng), tested % 2 ? Parity::odd : Parity::even};
        FormInvariants m{b2(rng), b2(rng), tested % 3 ? Parity::odd : Parity::even};
        if (n.parity == Parity::even && n.sig() % 8 != 0) continue;
        if (m.parity == Parity::even && m.sig() % 8 != 0) continue;
        if (n.rank() < 1 || m.rank() < 1) continue;
        if (embeddable_any_d(n, m)) continue;
        for (int d = 1; d <= 8; ++d)
            CHECK(degree_status(n, m, d) == DegreeStatus::impossible);
        ++tested;
    }
}

TEST_CASE("monotone closure under square factors") {
    const std::vector<std::pair<FormInvariants, FormInvariants>> pairs = {
        {{1, 1, Parity::odd}, {3, 3, Parity::odd}},
        {kK3, {4, 20, Parity::odd}},
        {kK3, {3, 19, Parity::even}},
        {{1, 1, Parity::even}, {2, 2, Parity::even}},
    };
    for (const auto& [n, m] : pairs)
        for (int d = 1; d <= 13; ++d) {
            if (degree_status(n, m, d) != DegreeStatus::guaranteed) continue;
            for (int h = 1; h <= 5; ++h)
                CHECK(degree_status(n, m, Int(d) * h * h) == DegreeStatus::guaranteed);
        }
}

TEST_CASE("branch regularity tags") {
    CHECK(branch_regularity(4) == BranchRegularity::nodal);
    CHECK(branch_regularity(5) == BranchRegularity::locally_flat);
    CHECK(branch_regularity(12) == BranchRegularity::locally_flat);
    CHECK_THROWS_AS(static_cast<void>(branch_regularity(3)), Error);
}

TEST_CASE("covering_report reproduces the K3 degree lists") {
    // odd target: degrees 4 and 6 guaranteed
    const DecisionReport odd = covering_report(kK3, {4, 20, Parity::odd}, true);
    CHECK(odd.embeddable);
    CHECK(covering_at(odd, 4) == CoveringStatus::guaranteed_covering);
    CHECK(covering_at(odd, 6) == CoveringStatus::guaranteed_covering);
    // and more by closure: 8 = 2 * 2^2
    CHECK(covering_at(odd, 8) == CoveringStatus::guaranteed_covering);
    CHECK(covering_at(odd, 1) == CoveringStatus::below_theorem_range);

    // even target: degrees 4 and 8 guaranteed
    const DecisionReport even = covering_report(kK3, {3, 19, Parity::even}, true);
    CHECK(covering_at(even, 4) == CoveringStatus::guaranteed_covering);
    CHECK(covering_at(even, 8) == CoveringStatus::guaranteed_covering);
    CHECK(covering_at(even, 6) == CoveringStatus::unknown);

    // without the handle hypothesis nothing is a guaranteed covering
    const DecisionReport weak = covering_report(kK3, {4, 20, Parity::odd}, false);
    for (const auto& [d, status] : weak.covering)
        CHECK(status != CoveringStatus::guaranteed_covering);
    CHECK(covering_at(weak, 4) == CoveringStatus::unknown);

    // impossibility needs no handle hypothesis
    const DecisionReport blocked = covering_report(kK3, {2, 30, Parity::odd}, false);
    CHECK(!blocked.embeddable);
    CHECK(!blocked.applicable_case.has_value());
    CHECK(covering_at(blocked, 5) == CoveringStatus::impossible);
    CHECK(!blocked.obstructions.empty());
}

TEST_CASE("construct_embedding reproduces the fixed examples") {
    // hyperbolic pair at degree 2
    const Embedding pair = construct_embedding({1, 1, Parity::odd},
                                               {1, 1, Parity::even}, 2);
    CHECK(pair.matrix == hyperbolic_pair(1).matrix);
    CHECK(pair.target == hyperbolic_sum(1));

    // K3 to itself at degree 4: two negative E8 blocks, three H blocks
    const Embedding k3 = construct_embedding(kK3, kK3, 4);
    CHECK(k3.degree == 4);
    Embedding expected = direct_sum_embed(e8_into_e8(4, Sign::minus),
                                          e8_into_e8(4, Sign::minus));
    expected = direct_sum_embed(expected, h_into_h(4));
    expected = direct_sum_embed(expected, h_into_h(4));
    expected = direct_sum_embed(expected, h_into_h(4));
    CHECK(k3 == expected);

    // closure: degree 9 between odd forms is 3 * identity
    const Embedding nine = construct_embedding({1, 1, Parity::odd},
                                               {1, 1, Parity::odd}, 9);
    CHECK(nine.matrix == IntMatrix::identity(2).scaled(3));
    CHECK(nine.degree == 9);

    CHECK_THROWS_AS(
        static_cast<void>(construct_embedding({1, 1, Parity::odd},
                                              {1, 1, Parity::odd}, 2)),
        Error);
}

TEST_CASE("construct_embedding spot checks across rows") {
    struct Case {
        FormInvariants n, m;
        int degree;
    };
    const std::vector<Case> cases = {
        {{2, 1, Parity::odd}, {3, 2, Parity::odd}, 1},       // row 1
        {{1, 1, Parity::odd}, {2, 2, Parity::odd}, 5},       // row 2
        {{1, 2, Parity::odd}, {3, 3, Parity::even}, 10},     // row 3
        {{3, 1, Parity::odd}, {9, 1, Parity::even}, 6},      // row 4, E8 spill
        {{2, 2, Parity::even}, {5, 4, Parity::odd}, 8},      // row 5
        {kK3, {4, 20, Parity::odd}, 6},                      // row 6
        {{3, 3, Parity::even}, {11, 3, Parity::even}, 7},    // row 7
        {{1, 9, Parity::even}, {18, 10, Parity::even}, 4},   // row 8, opposite signs
        {{9, 1, Parity::even}, {10, 2, Parity::even}, 12},   // row 8, same sign
        {kK3, {11, 19, Parity::even}, 8},                    // row 8, same sign, E8 overflow
        {{9, 1, Parity::even}, {10, 10, Parity::even}, 4},   // row 8, sig(M) = 0
    };
    for (const Case& c : cases) {
        const Embedding e = construct_embedding(c.n, c.m, c.degree);
        CHECK(e.degree == c.degree);
        CHECK(e.source == serre_normal_form(c.n));
        CHECK(e.target == serre_normal_form(c.m));
        CHECK(verify(e));
    }
}

TEST_CASE("construct_embedding rejects non-guaranteed degrees") {
    try {
        static_cast<void>(construct_embedding(kK3, kK3, 6));
        FAIL("expected not_guaranteed");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_guaranteed);
    }
}
