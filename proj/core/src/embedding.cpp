#include "latemb/embedding.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "latemb/error.hpp"
#include "latemb/oracle.hpp"

namespace latemb {

bool verify(const Embedding& e) {
    const int n = e.source.rank();
    const int m = e.target.rank();
    if (e.matrix.rows() != m || e.matrix.cols() != n)
        throw Error(Errc::dimension_mismatch,
                    "certificate matrix must be target-rank x source-rank");
    // p = target * T; zero Gram entries skipped (the block forms used
    // here are sparse, and skipping exact zeros changes nothing).
    IntMatrix p(m, n);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            const Int& g = e.target.at(i, k);
            if (g == 0) continue;
            for (int j = 0; j < n; ++j) p.at(i, j) += g * e.matrix.at(k, j);
        }
    // T^t * p is symmetric whenever the target form is, so comparing the
    // upper triangle against degree * source decides the whole identity.
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Int acc = 0;
            for (int k = 0; k < m; ++k) acc += e.matrix.at(k, i) * p.at(k, j);
            if (acc != e.degree * e.source.at(i, j)) return false;
        }
    return true;
}

namespace {

Embedding require_verified(Embedding e) {
    if (!verify(e))
        throw Error(Errc::internal, "constructed certificate failed verification");
    return e;
}

const IntMatrix& l2_matrix() {
    static const IntMatrix l2 = [] {
        const int rows[8][8] = {
            {1, 2, 1, 0, 0, 0, 0, 0},
            {0, 0, 1, 2, 1, 0, 0, 0},
            {0, 0, 0, 0, 1, 2, 1, 0},
            {0, 0, 0, 0, 1, 0, 0, 2},
            {0, 0, 1, 0, -1, 0, 1, 0},
            {1, 0, -1, 0, 0, 0, 1, 0},
            {1, 0, 0, 0, 0, 0, -1, 0},
            {-1, 0, 0, 0, 0, 0, 0, 0},
        };
        IntMatrix m(8, 8);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) m.at(i, j) = rows[i][j];
        return m;
    }();
    return l2;
}

} // namespace

Embedding identity_embedding(const GramMatrix& g) {
    return require_verified({Int(1), g, g, IntMatrix::identity(g.rank())});
}

Embedding compose(const Embedding& inner, const Embedding& outer) {
    if (inner.target != outer.source)
        throw Error(Errc::chain_mismatch,
                    "compose(): inner target and outer source differ");
    return require_verified({inner.degree * outer.degree, inner.source,
                             outer.target, outer.matrix * inner.matrix});
}

Embedding direct_sum_embed(const Embedding& a, const Embedding& b) {
    if (a.degree != b.degree)
        throw Error(Errc::degree_mismatch, "direct_sum_embed(): degrees differ");
    IntMatrix t(a.matrix.rows() + b.matrix.rows(), a.matrix.cols() + b.matrix.cols());
    for (int i = 0; i < a.matrix.rows(); ++i)
        for (int j = 0; j < a.matrix.cols(); ++j) t.at(i, j) = a.matrix.at(i, j);
    for (int i = 0; i < b.matrix.rows(); ++i)
        for (int j = 0; j < b.matrix.cols(); ++j)
            t.at(a.matrix.rows() + i, a.matrix.cols() + j) = b.matrix.at(i, j);
    return require_verified({a.degree, direct_sum(a.source, b.source),
                             direct_sum(a.target, b.target), std::move(t)});
}

Embedding amplify(const Embedding& e, const Int& h) {
    if (h < 1) throw Error(Errc::domain, "amplify() needs h >= 1");
    return require_verified({e.degree * h * h, e.source, e.target, e.matrix.scaled(h)});
}

Embedding hyperbolic_pair(const Int& k) {
    if (k < 1) throw Error(Errc::domain, "hyperbolic_pair() needs k >= 1");
    IntMatrix t(2, 2);
    t.at(0, 0) = 1;
    t.at(1, 0) = k;
    t.at(0, 1) = 1;
    t.at(1, 1) = -k;
    return require_verified({2 * k, diag_form(1, 1), hyperbolic_sum(1), std::move(t)});
}

Embedding single_into_h(const Int& k, Sign sign) {
    if (k < 1) throw Error(Errc::domain, "single_into_h() needs k >= 1");
    const Int s = sign == Sign::plus ? 1 : -1;
    IntMatrix t(2, 1);
    t.at(0, 0) = 1;
    t.at(1, 0) = s * k;
    return require_verified(
        {Int(1), GramMatrix::diagonal({s * 2 * k}), hyperbolic_sum(1), std::move(t)});
}

IntMatrix orthogonal_multiplier(int c) {
    if (c == 2) {
        IntMatrix m(8, 8);
        for (int b = 0; b < 4; ++b) {
            m.at(2 * b, 2 * b) = 1;
            m.at(2 * b, 2 * b + 1) = 1;
            m.at(2 * b + 1, 2 * b) = 1;
            m.at(2 * b + 1, 2 * b + 1) = -1;
        }
        return m;
    }
    if (c == 3) {
        const int block[4][4] = {
            {1, 1, 1, 0},
            {1, -1, 0, 1},
            {-1, 0, 1, 1},
            {0, 1, -1, 1},
        };
        IntMatrix m(8, 8);
        for (int b = 0; b < 2; ++b)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) m.at(4 * b + i, 4 * b + j) = block[i][j];
        return m;
    }
    throw Error(Errc::domain, "orthogonal_multiplier() supports c = 2 or 3");
}

Embedding l_matrix(int d) {
    if (d != 2 && d != 4 && d != 6)
        throw Error(Errc::unsupported_degree, "l_matrix() supports d in {2, 4, 6}");
    IntMatrix t = d == 2 ? l2_matrix() : orthogonal_multiplier(d / 2) * l2_matrix();
    return require_verified({Int(d), e8_form(Sign::plus), diag_form(8, 0), std::move(t)});
}

Embedding e8_into_hyperbolic(int d, Sign sign) {
    if (d != 4 && d != 8 && d != 12)
        throw Error(Errc::unsupported_degree,
                    "e8_into_hyperbolic() supports d in {4, 8, 12}");
    // l_matrix(d/2) read into <+-2>^8 doubles the degree to d; each
    // <+-2> generator then maps to e1 +- e2 of its own hyperbolic plane.
    const IntMatrix half = l_matrix(d / 2).matrix;
    const Int s = sign == Sign::plus ? 1 : -1;
    IntMatrix t(16, 8);
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) {
            t.at(2 * r, c) = half.at(r, c);
            t.at(2 * r + 1, c) = s * half.at(r, c);
        }
    return require_verified({Int(d), e8_form(sign), hyperbolic_sum(8), std::move(t)});
}

std::optional<IntMatrix> frame_in_e8(const Int& k) {
    if (k < 1) throw Error(Errc::domain, "frame_in_e8() needs k >= 1");
    static std::mutex mutex;
    static std::map<Int, std::optional<IntMatrix>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(k);
    if (it == cache.end())
        it = cache.emplace(k, orthogonal_frame_search(e8_form(Sign::plus), k, 8)).first;
    return it->second;
}

Embedding e8_into_e8(int d, Sign sign) {
    if (d != 4 && d != 8 && d != 12)
        throw Error(Errc::unsupported_degree, "e8_into_e8() supports d in {4, 8, 12}");
    const std::optional<IntMatrix> frame = frame_in_e8(Int(d / 2));
    if (!frame)
        throw Error(Errc::frame_not_found,
                    "no orthogonal frame of norm " + std::to_string(d / 2) + " found");
    // frame spans <d/2>^8 inside E8 (degree-1 certificate of the scaled
    // diagonal form); the degree-2 cube matrix into it contributes the
    // remaining factor.
    return require_verified(
        {Int(d), e8_form(sign), e8_form(sign), *frame * l2_matrix()});
}

Embedding h_into_h(const Int& k) {
    if (k < 1) throw Error(Errc::domain, "h_into_h() needs k >= 1");
    IntMatrix t(2, 2);
    t.at(0, 0) = 1;
    t.at(1, 1) = k;
    return require_verified({k, hyperbolic_sum(1), hyperbolic_sum(1), std::move(t)});
}

Embedding two_k_h_into_diag(const Int& k) {
    if (k < 1) throw Error(Errc::domain, "two_k_h_into_diag() needs k >= 1");
    IntMatrix t(2, 2);
    t.at(0, 0) = 1;
    t.at(1, 0) = 1;
    t.at(0, 1) = k;
    t.at(1, 1) = -k;
    return require_verified({2 * k, hyperbolic_sum(1), diag_form(1, 1), std::move(t)});
}

Embedding five_pair_same_sign(Sign sign) {
    const GramMatrix g = sign == Sign::plus ? diag_form(2, 0) : diag_form(0, 2);
    IntMatrix t(2, 2);
    t.at(0, 0) = 1;
    t.at(1, 0) = 2;
    t.at(0, 1) = 2;
    t.at(1, 1) = -1;
    return require_verified({Int(5), g, g, std::move(t)});
}

Embedding five_pair_mixed() {
    const GramMatrix g = diag_form(1, 1);
    IntMatrix t(2, 2);
    t.at(0, 0) = 3;
    t.at(1, 0) = 2;
    t.at(0, 1) = 2;
    t.at(1, 1) = 3;
    return require_verified({Int(5), g, g, std::move(t)});
}

Embedding negate_adapter(const Embedding& e) {
    return require_verified({e.degree, GramMatrix(e.source.matrix().negated()),
                             GramMatrix(e.target.matrix().negated()), e.matrix});
}

} // namespace latemb
