#include "latemb/gram.hpp"

#include <utility>

#include "latemb/error.hpp"

namespace latemb {

GramMatrix::GramMatrix(IntMatrix m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols())
        throw Error(Errc::domain, "gram matrix must be square");
    for (int i = 0; i < mat_.rows(); ++i)
        for (int j = i + 1; j < mat_.cols(); ++j)
            if (mat_.at(i, j) != mat_.at(j, i))
                throw Error(Errc::domain, "gram matrix must be symmetric");
}

GramMatrix GramMatrix::diagonal(const std::vector<Int>& diag) {
    IntMatrix m(static_cast<int>(diag.size()), static_cast<int>(diag.size()));
    for (int i = 0; i < m.rows(); ++i) m.at(i, i) = diag[static_cast<size_t>(i)];
    return GramMatrix(std::move(m));
}

Int determinant(const GramMatrix& g) {
    const int n = g.rank();
    if (n == 0) return 1;
    IntMatrix m = g.matrix();
    Int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (m.at(r, k) != 0) { piv = r; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        // Bareiss step: every division by prev is exact.
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

Inertia signature(const GramMatrix& g) {
    const int n = g.rank();
    std::vector<Rat> a(static_cast<size_t>(n) * n);
    auto at = [&](int i, int j) -> Rat& { return a[static_cast<size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) at(i, j) = Rat(g.at(i, j));

    auto add_row_col = [&](int i, int j) {
        for (int c = 0; c < n; ++c) at(i, c) += at(j, c);
        for (int r = 0; r < n; ++r) at(r, i) += at(r, j);
    };
    auto swap_row_col = [&](int i, int j) {
        for (int c = 0; c < n; ++c) std::swap(at(i, c), at(j, c));
        for (int r = 0; r < n; ++r) std::swap(at(r, i), at(r, j));
    };

    Inertia res;
    for (int t = 0; t < n; ++t) {
        int piv = -1;
        for (int i = t; i < n; ++i)
            if (at(i, i) != 0) { piv = i; break; }
        if (piv < 0) {
            // Zero diagonal block: merge the first nonzero off-diagonal pair,
            // which makes the (i,i) entry 2*a_ij, then pivot there.
            int fi = -1, fj = -1;
            for (int i = t; i < n && fi < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (at(i, j) != 0) { fi = i; fj = j; break; }
            if (fi < 0) break; // trailing block is identically zero
            add_row_col(fi, fj);
            piv = fi;
        }
        if (piv != t) swap_row_col(piv, t);
        const Rat d = at(t, t);
        for (int i = t + 1; i < n; ++i) {
            if (at(i, t) == 0) continue;
            const Rat f = at(i, t) / d;
            for (int c = t; c < n; ++c) at(i, c) -= f * at(t, c);
            for (int r = t; r < n; ++r) at(r, i) -= f * at(r, t);
        }
        if (d > 0) ++res.n_plus;
        else ++res.n_minus;
    }
    res.n_zero = n - res.n_plus - res.n_minus;
    return res;
}

Parity parity(const GramMatrix& g) {
    for (int i = 0; i < g.rank(); ++i)
        if (g.at(i, i) % 2 != 0) return Parity::odd;
    return Parity::even;
}

FormInvariants invariants(const GramMatrix& g) {
    const Inertia in = signature(g);
    if (in.n_zero > 0) throw Error(Errc::degenerate, "form is degenerate");
    const Int det = determinant(g);
    if (det != 1 && det != -1)
        throw Error(Errc::not_unimodular,
                    "form is not unimodular (det = " + det.str() + ")");
    return FormInvariants{in.n_plus, in.n_minus, parity(g)};
}

GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b) {
    IntMatrix m(a.rank() + b.rank(), a.rank() + b.rank());
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < a.rank(); ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rank(); ++i)
        for (int j = 0; j < b.rank(); ++j)
            m.at(a.rank() + i, a.rank() + j) = b.at(i, j);
    return GramMatrix(std::move(m));
}

GramMatrix scale(const GramMatrix& g, const Int& k) {
    if (k == 0) throw Error(Errc::zero_scale, "scale factor must be nonzero");
    return GramMatrix(g.matrix().scaled(k));
}

} // namespace latemb
