#include <doctest.h>

#include <algorithm>
#include <functional>

#include "latemb/error.hpp"
#include "latemb/oracle.hpp"
#include "test_helpers.hpp"

using namespace latemb;
using namespace latemb::testing;

namespace {

Int norm_of(const GramMatrix& g, const IntVec& v) {
    Int acc = 0;
    for (int i = 0; i < g.rank(); ++i)
        for (int j = 0; j < g.rank(); ++j)
            acc += g.at(i, j) * v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
    return acc;
}

} // namespace

TEST_CASE("enumerate_vectors_of_norm on the square lattice") {
    const GramMatrix i2 = diag_form(2, 0);
    const auto ones = enumerate_vectors_of_norm(i2, 1);
    REQUIRE(ones.size() == 4);
    // canonical order: 0 < 1 < -1, positions left to right
    CHECK(ones[0] == IntVec{0, 1});
    CHECK(ones[1] == IntVec{0, -1});
    CHECK(ones[2] == IntVec{1, 0});
    CHECK(ones[3] == IntVec{-1, 0});

    CHECK(enumerate_vectors_of_norm(i2, 3).empty()); // 3 is not x^2 + y^2
    CHECK(enumerate_vectors_of_norm(i2, 2).size() == 4);
    CHECK(enumerate_vectors_of_norm(i2, 25).size() == 12); // (0,5),(3,4) patterns
}

TEST_CASE("enumeration requires a positive definite form") {
    CHECK_THROWS_AS(static_cast<void>(enumerate_vectors_of_norm(hyperbolic_sum(1), 2)),
                    Error);
    CHECK_THROWS_AS(static_cast<void>(enumerate_vectors_of_norm(diag_form(0, 2), 2)),
                    Error);
    CHECK_THROWS_AS(static_cast<void>(enumerate_vectors_of_norm(diag_form(2, 0), 0)),
                    Error);
}

TEST_CASE("enumeration is complete and sound on E8 roots") {
    const GramMatrix e8 = e8_form(Sign::plus);
    const auto roots = enumerate_vectors_of_norm(e8, 2);
    CHECK(roots.size() == 240);
    CHECK(std::is_sorted(roots.begin(), roots.end(), canonical_less));
    for (const IntVec& v : roots) CHECK(norm_of(e8, v) == 2);
    // both signs are listed
    IntVec negated = roots[0];
    for (Int& x : negated) x = -x;
    CHECK(std::find(roots.begin(), roots.end(), negated) != roots.end());
}

TEST_CASE("orthogonal_frame_search basics") {
    const GramMatrix i8 = diag_form(8, 0);
    const auto frame = orthogonal_frame_search(i8, 1, 8);
    REQUIRE(frame.has_value());
    // least norm-1 frame is the standard basis; trailing basis vectors
    // have more leading zeros, so the columns come out reversed
    CHECK(frame->transposed() * *frame == IntMatrix::identity(8));
    for (int j = 0; j < 8; ++j) CHECK(frame->at(7 - j, j) == 1);

    const GramMatrix e8 = e8_form(Sign::plus);
    const auto roots_frame = orthogonal_frame_search(e8, 2, 8);
    REQUIRE(roots_frame.has_value());
    const IntMatrix product =
        roots_frame->transposed() * e8.matrix() * *roots_frame;
    CHECK(product == IntMatrix::identity(8).scaled(2));

    CHECK(!orthogonal_frame_search(e8, 1, 1).has_value());
    CHECK_THROWS_AS(static_cast<void>(orthogonal_frame_search(e8, 2, 9)), Error);
}

TEST_CASE("frame search is deterministic") {
    const GramMatrix e8 = e8_form(Sign::plus);
    const auto a = orthogonal_frame_search(e8, 2, 8);
    const auto b = orthogonal_frame_search(e8, 2, 8);
    REQUIRE(a.has_value());
    CHECK(*a == *b);
}

TEST_CASE("brute force on definite targets decides") {
    const GramMatrix one = GramMatrix::diagonal({Int(1)});
    const GramMatrix i2 = diag_form(2, 0);

    const SearchOutcome found = brute_force_embedding(one, i2, 2);
    REQUIRE(found.status == SearchOutcome::Status::found);
    REQUIRE(found.embedding.has_value());
    CHECK(found.embedding->matrix.at(0, 0) == 1); // least solution column (1,1)
    CHECK(found.embedding->matrix.at(1, 0) == 1);
    CHECK(verify(*found.embedding));

    const SearchOutcome missing = brute_force_embedding(one, i2, 3);
    CHECK(missing.status == SearchOutcome::Status::none);
    CHECK(missing.conclusive());
}

TEST_CASE("brute force box search on indefinite targets is flagged bounded") {
    const GramMatrix one = GramMatrix::diagonal({Int(1)});
    const GramMatrix h = hyperbolic_sum(1);
    const SearchOutcome out = brute_force_embedding(one, h, 1, 5);
    CHECK(out.status == SearchOutcome::Status::none_bounded);
    CHECK(!out.conclusive());

    // even degrees do land in H
    const SearchOutcome hit = brute_force_embedding(GramMatrix::diagonal({Int(2)}),
                                                    h, 1, 5);
    REQUIRE(hit.status == SearchOutcome::Status::found);
    CHECK(verify(*hit.embedding));
}

TEST_CASE("brute force independently rediscovers the degree-2 cube embedding") {
    const SearchOutcome out =
        brute_force_embedding(e8_form(Sign::plus), diag_form(8, 0), 2);
    REQUIRE(out.status == SearchOutcome::Status::found);
    CHECK(verify(*out.embedding));
    CHECK(out.embedding->degree == 2);
}

TEST_CASE("norm list cache validates its target") {
    const GramMatrix i2 = diag_form(2, 0);
    NormListCache cache(i2);
    CHECK(cache.vectors_of_norm(1).size() == 4);
    CHECK(cache.vectors_of_norm(-1).empty());
    CHECK(cache.vectors_of_norm(0).size() == 1);
    CHECK_THROWS_AS(
        static_cast<void>(brute_force_embedding(i2, diag_form(3, 0), 1, 10, &cache)),
        Error);
    CHECK_THROWS_AS(NormListCache(hyperbolic_sum(1)), Error);

    // negative definite targets flip the sign convention internally
    NormListCache neg(diag_form(0, 2));
    CHECK(neg.vectors_of_norm(-1).size() == 4);
    CHECK(neg.vectors_of_norm(1).empty());
}

TEST_CASE("definite search agrees with a naive reference on random instances") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> entry(-2, 2);
    int checked = 0;
    while (checked < 150) {
        const int n = 1 + checked % 2, m = 2;
        GramMatrix gn = random_gram(rng, n, 2);
        IntMatrix tm(m, m);
        for (int i = 0; i < m; ++i) tm.at(i, i) = 1 + (checked % 2);
        tm.at(0, 1) = entry(rng) % 2;
        tm.at(1, 0) = tm.at(0, 1);
        GramMatrix gm(std::move(tm));
        if (signature(gm) != Inertia{m, 0, 0}) continue;
        const Int d = 1 + checked % 3;

        const SearchOutcome fast = brute_force_embedding(gn, gm, d);
        // reference: scan all columns with |coordinate| <= 4 directly
        bool naive_found = false;
        std::vector<IntVec> box;
        IntVec v(static_cast<size_t>(m), Int(-4));
        for (;;) {
            box.push_back(v);
            int pos = m - 1;
            while (pos >= 0 && v[static_cast<size_t>(pos)] == 4) {
                v[static_cast<size_t>(pos)] = -4;
                --pos;
            }
            if (pos < 0) break;
            ++v[static_cast<size_t>(pos)];
        }
        const size_t total = box.size();
        std::vector<size_t> idx(static_cast<size_t>(n), 0);
        std::function<bool(int)> rec = [&](int col) -> bool {
            if (col == n) return true;
            for (size_t c = 0; c < total; ++c) {
                bool ok = true;
                idx[static_cast<size_t>(col)] = c;
                for (int i = 0; i <= col && ok; ++i)
                    for (int j = 0; j <= col && ok; ++j) {
                        Int acc = 0;
                        const IntVec& a = box[idx[static_cast<size_t>(i)]];
                        const IntVec& b = box[idx[static_cast<size_t>(j)]];
                        for (int r = 0; r < m; ++r)
                            for (int s = 0; s < m; ++s)
                                acc += gm.at(r, s) * a[static_cast<size_t>(r)] *
                                       b[static_cast<size_t>(s)];
                        if (acc != d * gn.at(i, j)) ok = false;
                    }
                if (ok && rec(col + 1)) return true;
            }
            return false;
        };
        naive_found = rec(0);
        CHECK((fast.status == SearchOutcome::Status::found) == naive_found);
        ++checked;
    }
}
