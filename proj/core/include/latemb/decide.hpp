#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latemb/embedding.hpp"

namespace latemb {

/// Symbolic set of guaranteed degrees. Attainable degrees are closed
/// under multiplication by perfect squares, so finite bases are kept in
/// a canonical reduced form: sorted, and no element is another element
/// times a perfect square.
struct DegreeFamily {
    enum class Kind { empty, all, all_even, square_closure };

    Kind kind = Kind::empty;
    std::vector<Int> base; // only meaningful for square_closure

    /// empty -> never; all -> d >= 1; all_even -> even d; square_closure
    /// -> some b in base with d/b a perfect square.
    bool contains(const Int& d) const;

    static DegreeFamily none();
    static DegreeFamily every();
    static DegreeFamily every_even();
    static DegreeFamily squares_of(std::vector<Int> raw); // canonicalizes

    bool operator==(const DegreeFamily&) const = default;
};

/// Some degree d >= 1 admits an embedding iff both inertia inequalities
/// b2+(N) <= b2+(M) and b2-(N) <= b2-(M) hold.
bool embeddable_any_d(const FormInvariants& inv_n, const FormInvariants& inv_m);

/// Row 1-8 of the guaranteed-degree table selected by the parities and
/// signature conditions. Rows 1 and 2 share a cell; the more specific
/// row 2 is reported when its half-rank condition 2*b2(N) <= b2(M)
/// holds. Meaningful regardless of embeddability.
int table_case(const FormInvariants& inv_n, const FormInvariants& inv_m);

/// The guaranteed degrees for the pair, empty when not embeddable:
/// rows 1-2 give squares_of({1}) or squares_of({1,5}), rows 4 and 6
/// squares_of({2,4,6}), row 8 squares_of({4,8,12}), rows 3 and 5 every
/// even degree, row 7 every degree. Sufficient, not exhaustive.
DegreeFamily guaranteed_degrees(const FormInvariants& inv_n,
                                const FormInvariants& inv_m);

enum class DegreeStatus { guaranteed, impossible, unknown };

/// guaranteed on family membership; impossible when an inequality fails
/// or when d is odd, N is odd and M is even (the rescaled form stays odd
/// and an odd form never embeds isometrically in an even one); otherwise
/// unknown — the table is sufficient only.
DegreeStatus degree_status(const FormInvariants& inv_n,
                           const FormInvariants& inv_m, const Int& d);

struct Obstruction {
    std::string kind; // "b2_plus_inequality" | "b2_minus_inequality" | "parity"
    std::string detail;

    bool operator==(const Obstruction&) const = default;
};

enum class CoveringStatus {
    guaranteed_covering,
    impossible,
    unknown,
    below_theorem_range, // d <= 3: the covering criterion is silent
};

enum class BranchRegularity { nodal, locally_flat };

/// Branch-set regularity guaranteed at degree d >= 4: nodal at d == 4,
/// locally flat at d >= 5. Throws Errc::domain for d < 4.
BranchRegularity branch_regularity(const Int& d);

struct DecisionReport {
    bool embeddable = false;
    std::optional<int> applicable_case;
    DegreeFamily guaranteed;
    std::vector<Obstruction> obstructions;
    // per queried degree, sorted ascending
    std::vector<std::pair<Int, CoveringStatus>> covering;
};

/// Covering consequences for the queried degrees (default 1..12).
/// guaranteed_covering requires d >= 4, a guaranteed embedding degree,
/// and the caller-supplied assertion that N has a handle decomposition
/// with no 1- and 3-handles; impossibility needs no such assumption.
DecisionReport covering_report(const FormInvariants& inv_n,
                               const FormInvariants& inv_m,
                               bool assume_no_1_3_handles,
                               const std::vector<Int>& degrees = {});

/// Explicit certificate of degree d between the Serre normal forms of
/// the two invariants (the caller's own basis is out of scope; the
/// normal-form convention is part of the contract). Requires
/// degree_status == guaranteed (Errc::not_guaranteed). The summand
/// allocator packs the constructive pieces deterministically and a
/// contradiction with the table raises Errc::allocation_infeasible
/// rather than being patched over.
Embedding construct_embedding(const FormInvariants& inv_n,
                              const FormInvariants& inv_m, const Int& d);

} // namespace latemb
