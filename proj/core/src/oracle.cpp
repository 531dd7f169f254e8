#include "latemb/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "latemb/error.hpp"

namespace latemb {

namespace {

// 0 < 1 < -1 < 2 < -2 < ...
int canonical_compare(const Int& a, const Int& b) {
    const Int aa = abs(a), ab = abs(b);
    if (aa != ab) return aa < ab ? -1 : 1;
    if (a == b) return 0;
    return a > b ? -1 : 1; // positive before negative at equal magnitude
}

} // namespace

bool canonical_less(const IntVec& a, const IntVec& b) {
    const size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        const int c = canonical_compare(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

namespace {

// Rational LDL^t of a positive definite form: Q(x) = sum_i D[i] *
// (x_i + sum_{j>i} U[i][j] x_j)^2 with every pivot D[i] > 0. Exactness
// of the pivots is what makes the enumeration bounds complete.
struct RationalLdl {
    std::vector<Rat> d;
    std::vector<std::vector<Rat>> u; // strictly upper

    explicit RationalLdl(const GramMatrix& g) {
        const int n = g.rank();
        d.resize(n);
        u.assign(n, std::vector<Rat>(n));
        std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) a[i][j] = Rat(g.at(i, j));
        for (int i = 0; i < n; ++i) {
            const Rat piv = a[i][i];
            if (piv <= 0)
                throw Error(Errc::not_positive_definite,
                            "form is not positive definite");
            d[i] = piv;
            for (int j = i + 1; j < n; ++j) u[i][j] = a[i][j] / piv;
            for (int r = i + 1; r < n; ++r)
                for (int c = r; c < n; ++c) a[r][c] -= a[i][r] * a[i][c] / piv;
        }
    }
};

struct Enumerator {
    const RationalLdl& ldl;
    int n;
    IntVec x;
    std::vector<IntVec>* out;

    // remaining = norm minus the terms for levels > i, all exact.
    void run(int i, const Rat& remaining) {
        Rat center = 0; // -C_i where C_i = sum_{j>i} u[i][j] x_j
        for (int j = i + 1; j < n; ++j)
            if (x[static_cast<size_t>(j)] != 0)
                center -= ldl.u[i][j] * x[static_cast<size_t>(j)];
        const Int lo = rat_floor(center);
        for (Int t = lo;; --t) {
            if (!step(i, t, center, remaining)) break;
        }
        for (Int t = lo + 1;; ++t) {
            if (!step(i, t, center, remaining)) break;
        }
    }

    bool step(int i, const Int& t, const Rat& center, const Rat& remaining) {
        const Rat dev = Rat(t) - center;
        const Rat term = ldl.d[i] * dev * dev;
        if (term > remaining) return false;
        x[static_cast<size_t>(i)] = t;
        if (i == 0) {
            if (term == remaining) out->push_back(x);
        } else {
            run(i - 1, remaining - term);
        }
        return true;
    }
};

} // namespace

std::vector<IntVec> enumerate_vectors_of_norm(const GramMatrix& g, const Int& norm) {
    if (norm < 1) throw Error(Errc::domain, "norm must be >= 1");
    const int n = g.rank();
    if (n == 0) return {};
    RationalLdl ldl(g); // throws unless positive definite
    std::vector<IntVec> out;
    Enumerator en{ldl, n, IntVec(static_cast<size_t>(n), Int(0)), &out};
    en.run(n - 1, Rat(norm));
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

namespace {

IntVec gram_times(const GramMatrix& g, const IntVec& v) {
    IntVec r(static_cast<size_t>(g.rank()), Int(0));
    for (int i = 0; i < g.rank(); ++i) {
        Int acc = 0;
        for (int j = 0; j < g.rank(); ++j)
            if (v[static_cast<size_t>(j)] != 0) acc += g.at(i, j) * v[static_cast<size_t>(j)];
        r[static_cast<size_t>(i)] = acc;
    }
    return r;
}

Int dot(const IntVec& a, const IntVec& b) {
    Int acc = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) acc += a[i] * b[i];
    return acc;
}

} // namespace

std::optional<IntMatrix> orthogonal_frame_search(const GramMatrix& g,
                                                 const Int& norm, int count) {
    if (count < 1) throw Error(Errc::domain, "frame size must be >= 1");
    if (count > g.rank())
        throw Error(Errc::domain, "frame size exceeds the rank of the form");
    const std::vector<IntVec> candidates = enumerate_vectors_of_norm(g, norm);
    std::vector<IntVec> paired; // g * candidate, for O(n) orthogonality tests
    paired.reserve(candidates.size());
    for (const IntVec& v : candidates) paired.push_back(gram_times(g, v));

    std::vector<int> chosen;
    chosen.reserve(static_cast<size_t>(count));
    auto dfs = [&](auto&& self, size_t start) -> bool {
        if (static_cast<int>(chosen.size()) == count) return true;
        const size_t need = static_cast<size_t>(count) - chosen.size();
        for (size_t idx = start; idx + need <= candidates.size(); ++idx) {
            bool ok = true;
            for (int c : chosen)
                if (dot(candidates[idx], paired[static_cast<size_t>(c)]) != 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(static_cast<int>(idx));
            if (self(self, idx + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;

    IntMatrix frame(g.rank(), count);
    for (int j = 0; j < count; ++j)
        for (int i = 0; i < g.rank(); ++i)
            frame.at(i, j) = candidates[static_cast<size_t>(chosen[static_cast<size_t>(j)])]
                                       [static_cast<size_t>(i)];
    return frame;
}

NormListCache::NormListCache(GramMatrix target) : target_(std::move(target)) {
    const Inertia in = signature(target_);
    if (in.n_zero > 0 || (in.n_plus > 0 && in.n_minus > 0))
        throw Error(Errc::domain, "norm-list cache requires a definite form");
    negated_ = in.n_minus > 0;
    positive_ = negated_ ? GramMatrix(target_.matrix().negated()) : target_;
}

const std::vector<IntVec>& NormListCache::vectors_of_norm(const Int& value) {
    const Int key = negated_ ? Int(-value) : value;
    auto it = lists_.find(key);
    if (it != lists_.end()) return it->second;
    std::vector<IntVec> list;
    if (key == 0) {
        list.emplace_back(static_cast<size_t>(target_.rank()), Int(0));
    } else if (key > 0) {
        list = enumerate_vectors_of_norm(positive_, key);
    } // key < 0: no vectors in a positive definite form
    return lists_.emplace(key, std::move(list)).first->second;
}

namespace {

// Backtracking over source columns: column j ranges over candidates of
// the required norm, subject to the pairing d*gn(i,j) against every
// already-chosen column i. Candidate lists are in canonical order, so
// the first complete assignment is the least solution.
struct ColumnSearch {
    const GramMatrix& gn;
    const GramMatrix& gm;
    const Int& d;
    const std::vector<const std::vector<IntVec>*>& lists;

    std::vector<const IntVec*> chosen;
    std::vector<IntVec> chosen_rows; // gm * chosen column

    bool dfs(int j) {
        const int n = gn.rank();
        if (j == n) return true;
        for (const IntVec& v : *lists[static_cast<size_t>(j)]) {
            bool ok = true;
            for (int i = 0; i < j; ++i)
                if (dot(v, chosen_rows[static_cast<size_t>(i)]) != d * gn.at(i, j)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(&v);
            chosen_rows.push_back(gram_times(gm, v));
            if (dfs(j + 1)) return true;
            chosen.pop_back();
            chosen_rows.pop_back();
        }
        return false;
    }

    IntMatrix matrix() const {
        IntMatrix t(gm.rank(), gn.rank());
        for (int j = 0; j < gn.rank(); ++j)
            for (int i = 0; i < gm.rank(); ++i)
                t.at(i, j) = (*chosen[static_cast<size_t>(j)])[static_cast<size_t>(i)];
        return t;
    }
};

Embedding make_verified(const GramMatrix& gn, const GramMatrix& gm, const Int& d,
                        IntMatrix t) {
    Embedding e{d, gn, gm, std::move(t)};
    if (!verify(e))
        throw Error(Errc::internal, "search produced an invalid certificate");
    return e;
}

} // namespace

SearchOutcome brute_force_embedding(const GramMatrix& gn, const GramMatrix& gm,
                                    const Int& d, const Int& bound,
                                    NormListCache* cache) {
    if (d < 1) throw Error(Errc::domain, "degree must be >= 1");
    const int n = gn.rank();
    const int m = gm.rank();

    bool definite;
    if (cache) {
        // the cache constructor already established definiteness
        if (cache->target() != gm)
            throw Error(Errc::domain, "norm-list cache built for a different target");
        definite = true;
    } else {
        const Inertia in = signature(gm);
        definite = in.n_zero == 0 && (in.n_plus == 0 || in.n_minus == 0);
    }

    if (definite) {
        std::optional<NormListCache> local;
        if (!cache) {
            local.emplace(gm);
            cache = &*local;
        }
        std::vector<const std::vector<IntVec>*> lists;
        lists.reserve(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            lists.push_back(&cache->vectors_of_norm(d * gn.at(j, j)));
            if (lists.back()->empty())
                return SearchOutcome{SearchOutcome::Status::none, {}};
        }
        ColumnSearch search{gn, gm, d, lists, {}, {}};
        if (!search.dfs(0)) return SearchOutcome{SearchOutcome::Status::none, {}};
        return SearchOutcome{SearchOutcome::Status::found,
                             make_verified(gn, gm, d, search.matrix())};
    }

    // Indefinite (or degenerate) target: complete scan of the coordinate
    // box, bucketed by norm, then the same backtracking. A miss is only
    // inconclusive.
    if (bound < 1)
        throw Error(Errc::domain, "indefinite targets require bound >= 1");
    const double cells = std::pow(2.0 * bound.convert_to<double>() + 1.0, m);
    if (!(cells <= 1e8))
        throw Error(Errc::domain, "search box exceeds 1e8 cells; lower the bound");

    std::map<Int, std::vector<IntVec>> buckets;
    for (int j = 0; j < n; ++j) buckets.emplace(d * gn.at(j, j), std::vector<IntVec>{});

    IntVec v(static_cast<size_t>(m), Int(-bound));
    if (m == 0) {
        if (auto it = buckets.find(0); it != buckets.end()) it->second.push_back({});
    } else {
        for (;;) {
            Int q = 0;
            for (int i = 0; i < m; ++i) {
                if (v[static_cast<size_t>(i)] == 0) continue;
                q += gm.at(i, i) * v[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
                for (int j = i + 1; j < m; ++j)
                    q += 2 * gm.at(i, j) * v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
            }
            if (auto it = buckets.find(q); it != buckets.end()) it->second.push_back(v);
            int pos = m - 1;
            while (pos >= 0 && v[static_cast<size_t>(pos)] == bound) {
                v[static_cast<size_t>(pos)] = -bound;
                --pos;
            }
            if (pos < 0) break;
            ++v[static_cast<size_t>(pos)];
        }
    }
    for (auto& [key, list] : buckets) std::sort(list.begin(), list.end(), canonical_less);

    std::vector<const std::vector<IntVec>*> lists;
    lists.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        lists.push_back(&buckets.at(d * gn.at(j, j)));
        if (lists.back()->empty())
            return SearchOutcome{SearchOutcome::Status::none_bounded, {}};
    }
    ColumnSearch search{gn, gm, d, lists, {}, {}};
    if (!search.dfs(0))
        return SearchOutcome{SearchOutcome::Status::none_bounded, {}};
    return SearchOutcome{SearchOutcome::Status::found,
                         make_verified(gn, gm, d, search.matrix())};
}

} // namespace latemb
