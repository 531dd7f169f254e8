#pragma once

#include <map>
#include <optional>
#include <vector>

#include "latemb/embedding.hpp"

namespace latemb {

/// Coordinate order used by every search in this module: scalars compare
/// as 0 < 1 < -1 < 2 < -2 < ..., vectors lexicographically under that
/// scalar order. "Least solution" always means least in this order.
bool canonical_less(const IntVec& a, const IntVec& b);

/// The complete list of integer vectors v with v^t G v == norm, sorted
/// in canonical order, both signs listed. G must be positive definite
/// (checked exactly; Errc::not_positive_definite otherwise) and
/// norm >= 1. Coordinate bounds come from an exact rational LDL^t
/// decomposition, so no boundary vector can be missed.
std::vector<IntVec> enumerate_vectors_of_norm(const GramMatrix& g, const Int& norm);

/// count pairwise-orthogonal vectors of the given norm in a positive
/// definite form, as the columns of a rank(g) x count matrix, or nullopt
/// when exhaustive search proves no such frame exists. Deterministic:
/// the least solution in canonical order.
std::optional<IntMatrix> orthogonal_frame_search(const GramMatrix& g,
                                                 const Int& norm, int count);

/// Complete candidate lists for a fixed definite target form, memoized
/// per required norm. Sharing one cache across many searches against the
/// same target avoids re-enumerating. The cache itself is not
/// synchronized; give each thread its own.
class NormListCache {
public:
    /// Throws Errc::domain unless target is positive or negative definite.
    explicit NormListCache(GramMatrix target);

    const GramMatrix& target() const noexcept { return target_; }

    /// All v with v^t target v == value, canonical order.
    const std::vector<IntVec>& vectors_of_norm(const Int& value);

private:
    GramMatrix target_;
    GramMatrix positive_; // target or its negation, positive definite
    bool negated_ = false;
    std::map<Int, std::vector<IntVec>> lists_;
};

struct SearchOutcome {
    enum class Status {
        found,        // embedding constructed and verified
        none,         // exhaustive search: no embedding exists
        none_bounded, // box search exhausted: inconclusive
    };

    Status status = Status::none_bounded;
    std::optional<Embedding> embedding;

    bool conclusive() const { return status != Status::none_bounded; }
};

/// Searches for T with T^t gm T == d * gn by backtracking over candidate
/// columns. Definite targets give an exact decision: candidates are the
/// finite norm lists and "none" is a proof of non-existence. Indefinite
/// (or degenerate) targets are searched over the box |coordinate| <=
/// bound only, and a miss is reported as the inconclusive none_bounded.
/// Returns the least solution in canonical column-major order. The box
/// is rejected (Errc::domain) when it exceeds ~1e8 cells; ranks <= 8 are
/// the intended regime. An optional cache (same target) is reused across
/// calls.
SearchOutcome brute_force_embedding(const GramMatrix& gn, const GramMatrix& gm,
                                    const Int& d, const Int& bound = 10,
                                    NormListCache* cache = nullptr);

} // namespace latemb
