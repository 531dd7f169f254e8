#include "latemb/decide.hpp"

#include <algorithm>
#include <cstdlib>

#include "latemb/error.hpp"

namespace latemb {

bool DegreeFamily::contains(const Int& d) const {
    if (d < 1) return false;
    switch (kind) {
        case Kind::empty: return false;
        case Kind::all: return true;
        case Kind::all_even: return d % 2 == 0;
        case Kind::square_closure:
            for (const Int& b : base)
                if (d % b == 0 && is_perfect_square(d / b)) return true;
            return false;
    }
    return false;
}

DegreeFamily DegreeFamily::none() { return {Kind::empty, {}}; }
DegreeFamily DegreeFamily::every() { return {Kind::all, {}}; }
DegreeFamily DegreeFamily::every_even() { return {Kind::all_even, {}}; }

DegreeFamily DegreeFamily::squares_of(std::vector<Int> raw) {
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<Int> reduced;
    for (const Int& b : raw) {
        bool redundant = false;
        for (const Int& smaller : reduced)
            if (b % smaller == 0 && is_perfect_square(b / smaller)) {
                redundant = true;
                break;
            }
        if (!redundant) reduced.push_back(b);
    }
    return {Kind::square_closure, std::move(reduced)};
}

bool embeddable_any_d(const FormInvariants& inv_n, const FormInvariants& inv_m) {
    validate_invariants(inv_n);
    validate_invariants(inv_m);
    return inv_n.b2_plus <= inv_m.b2_plus && inv_n.b2_minus <= inv_m.b2_minus;
}

int table_case(const FormInvariants& inv_n, const FormInvariants& inv_m) {
    validate_invariants(inv_n);
    validate_invariants(inv_m);
    if (inv_n.parity == Parity::odd) {
        if (inv_m.parity == Parity::odd)
            return 2 * inv_n.rank() <= inv_m.rank() ? 2 : 1;
        return inv_m.sig() == 0 ? 3 : 4;
    }
    if (inv_m.parity == Parity::odd) return inv_n.sig() == 0 ? 5 : 6;
    return inv_n.sig() == 0 ? 7 : 8;
}

DegreeFamily guaranteed_degrees(const FormInvariants& inv_n,
                                const FormInvariants& inv_m) {
    if (!embeddable_any_d(inv_n, inv_m)) return DegreeFamily::none();
    switch (table_case(inv_n, inv_m)) {
        case 1: return DegreeFamily::squares_of({Int(1)});
        case 2: return DegreeFamily::squares_of({Int(1), Int(5)});
        case 3:
        case 5: return DegreeFamily::every_even();
        case 4:
        case 6: return DegreeFamily::squares_of({Int(2), Int(4), Int(6)});
        case 7: return DegreeFamily::every();
        case 8: return DegreeFamily::squares_of({Int(4), Int(8), Int(12)});
    }
    return DegreeFamily::none();
}

DegreeStatus degree_status(const FormInvariants& inv_n,
                           const FormInvariants& inv_m, const Int& d) {
    if (d < 1) throw Error(Errc::domain, "degree must be >= 1");
    if (!embeddable_any_d(inv_n, inv_m)) return DegreeStatus::impossible;
    // d odd keeps an odd form odd, and an odd form has a vector of odd
    // self-pairing, which an even target cannot contain.
    if (d % 2 != 0 && inv_n.parity == Parity::odd && inv_m.parity == Parity::even)
        return DegreeStatus::impossible;
    if (guaranteed_degrees(inv_n, inv_m).contains(d)) return DegreeStatus::guaranteed;
    return DegreeStatus::unknown;
}

BranchRegularity branch_regularity(const Int& d) {
    if (d < 4)
        throw Error(Errc::domain, "branch regularity is only guaranteed for d >= 4");
    return d == 4 ? BranchRegularity::nodal : BranchRegularity::locally_flat;
}

DecisionReport covering_report(const FormInvariants& inv_n,
                               const FormInvariants& inv_m,
                               bool assume_no_1_3_handles,
                               const std::vector<Int>& degrees) {
    DecisionReport report;
    report.embeddable = embeddable_any_d(inv_n, inv_m);
    if (report.embeddable) {
        report.applicable_case = table_case(inv_n, inv_m);
    } else {
        if (inv_n.b2_plus > inv_m.b2_plus)
            report.obstructions.push_back(
                {"b2_plus_inequality",
                 "b2_plus(N) = " + std::to_string(inv_n.b2_plus) + " exceeds b2_plus(M) = " +
                     std::to_string(inv_m.b2_plus)});
        if (inv_n.b2_minus > inv_m.b2_minus)
            report.obstructions.push_back(
                {"b2_minus_inequality",
                 "b2_minus(N) = " + std::to_string(inv_n.b2_minus) +
                     " exceeds b2_minus(M) = " + std::to_string(inv_m.b2_minus)});
    }
    if (inv_n.parity == Parity::odd && inv_m.parity == Parity::even)
        report.obstructions.push_back(
            {"parity",
             "odd degrees keep the rescaled form odd; an odd form never embeds "
             "isometrically in an even one"});
    report.guaranteed = guaranteed_degrees(inv_n, inv_m);

    std::vector<Int> queried = degrees;
    if (queried.empty())
        for (int d = 1; d <= 12; ++d) queried.emplace_back(d);
    std::sort(queried.begin(), queried.end());
    queried.erase(std::unique(queried.begin(), queried.end()), queried.end());

    for (const Int& d : queried) {
        CoveringStatus status;
        if (d <= 3) {
            status = CoveringStatus::below_theorem_range;
        } else {
            switch (degree_status(inv_n, inv_m, d)) {
                case DegreeStatus::impossible:
                    status = CoveringStatus::impossible;
                    break;
                case DegreeStatus::guaranteed:
                    status = assume_no_1_3_handles ? CoveringStatus::guaranteed_covering
                                                   : CoveringStatus::unknown;
                    break;
                default: status = CoveringStatus::unknown;
            }
        }
        report.covering.emplace_back(d, status);
    }
    return report;
}

namespace {

[[noreturn]] void infeasible(const char* what) {
    throw Error(Errc::allocation_infeasible, what);
}

// Slot bookkeeping for a diagonal target diag(+1 x p, -1 x q).
struct OddSlots {
    int p, q;
    int next_p = 0, next_q = 0;

    int take_plus() {
        if (next_p == p) infeasible("no positive diagonal slot left");
        return next_p++;
    }
    int take_minus() {
        if (next_q == q) infeasible("no negative diagonal slot left");
        return p + next_q++;
    }
    int free_plus() const { return p - next_p; }
    int free_minus() const { return q - next_q; }
};

// Slot bookkeeping for an even normal form: e8_count sign-definite E8
// blocks first, then h_count hyperbolic planes.
struct EvenSlots {
    int e8_count = 0;
    Sign e8_sign = Sign::plus;
    int h_count = 0;
    int next_e8 = 0, next_h = 0;

    static EvenSlots of(const FormInvariants& inv) {
        EvenSlots s;
        s.e8_count = std::abs(inv.sig()) / 8;
        s.e8_sign = inv.sig() >= 0 ? Sign::plus : Sign::minus;
        s.h_count = std::min(inv.b2_plus, inv.b2_minus);
        return s;
    }

    int e8_row(int block, int i) const { return 8 * block + i; }
    int h_row(int block, int i) const { return 8 * e8_count + 2 * block + i; }

    int take_e8() {
        if (next_e8 == e8_count) infeasible("no E8 block left");
        return next_e8++;
    }
    int take_h() {
        if (next_h == h_count) infeasible("no hyperbolic block left");
        return next_h++;
    }
    int free_h() const { return h_count - next_h; }
};

// Case 1: column selection, degree 1.
void fill_identity_inclusion(IntMatrix& t, int p, int q, OddSlots& slots) {
    for (int i = 0; i < p; ++i) t.at(slots.take_plus(), i) = 1;
    for (int j = 0; j < q; ++j) t.at(slots.take_minus(), p + j) = 1;
}

// Case 2: degree 5 between diagonal forms. Same-sign generator pairs go
// two-at-a-time into same-sign slot pairs via (1,2),(2,-1); leftovers go
// into a mixed slot pair via (3,2)/(2,3), or into a same-sign pair via a
// single (1,2) column when no opposite slot is free.
void fill_degree_five(IntMatrix& t, int p, int q, OddSlots& slots) {
    auto same_sign_pair = [&](int col0, int col1, bool plus) {
        const int a = plus ? slots.take_plus() : slots.take_minus();
        const int b = plus ? slots.take_plus() : slots.take_minus();
        t.at(a, col0) = 1;
        t.at(b, col0) = 2;
        t.at(a, col1) = 2;
        t.at(b, col1) = -1;
    };
    for (int i = 0; i + 1 < p; i += 2) same_sign_pair(i, i + 1, true);
    for (int j = 0; j + 1 < q; j += 2) same_sign_pair(p + j, p + j + 1, false);

    const int leftover_plus = p % 2 != 0 ? p - 1 : -1;
    const int leftover_minus = q % 2 != 0 ? p + q - 1 : -1;
    if (leftover_plus >= 0 && leftover_minus >= 0) {
        const int a = slots.take_plus(), b = slots.take_minus();
        t.at(a, leftover_plus) = 3;
        t.at(b, leftover_plus) = 2;
        t.at(a, leftover_minus) = 2;
        t.at(b, leftover_minus) = 3;
    } else if (leftover_plus >= 0) {
        if (slots.free_minus() > 0) {
            t.at(slots.take_plus(), leftover_plus) = 3;
            t.at(slots.take_minus(), leftover_plus) = 2;
        } else {
            const int a = slots.take_plus(), b = slots.take_plus();
            t.at(a, leftover_plus) = 1;
            t.at(b, leftover_plus) = 2;
        }
    } else if (leftover_minus >= 0) {
        if (slots.free_plus() > 0) {
            t.at(slots.take_plus(), leftover_minus) = 2;
            t.at(slots.take_minus(), leftover_minus) = 3;
        } else {
            const int a = slots.take_minus(), b = slots.take_minus();
            t.at(a, leftover_minus) = 1;
            t.at(b, leftover_minus) = 2;
        }
    }
}

// Cases 3 and 4: odd source into an even target at even degree 2k.
// Opposite-sign generator pairs share a hyperbolic plane; remaining
// singles take a plane each; same-sign overflow goes eight-at-a-time
// into matching-sign E8 blocks through an orthogonal frame.
void fill_odd_to_even(IntMatrix& t, int p, int q, const Int& k, EvenSlots& slots) {
    const int pairs = std::min(p, q);
    for (int i = 0; i < pairs; ++i) {
        const int h = slots.take_h();
        t.at(slots.h_row(h, 0), i) = 1;
        t.at(slots.h_row(h, 1), i) = k;
        t.at(slots.h_row(h, 0), p + i) = 1;
        t.at(slots.h_row(h, 1), p + i) = -k;
    }
    const bool plus_left = p > q;
    const int leftover = std::abs(p - q);
    const Int s = plus_left ? 1 : -1;
    int frame_block = -1, frame_used = 8;
    for (int idx = 0; idx < leftover; ++idx) {
        const int col = plus_left ? q + idx : p + p + idx;
        if (slots.free_h() > 0) {
            const int h = slots.take_h();
            t.at(slots.h_row(h, 0), col) = 1;
            t.at(slots.h_row(h, 1), col) = s * k;
            continue;
        }
        const Sign needed = plus_left ? Sign::plus : Sign::minus;
        if (slots.e8_sign != needed || slots.e8_count == 0)
            infeasible("diagonal generator has no matching-sign block");
        const Int norm = 2 * k;
        const std::optional<IntMatrix> frame = frame_in_e8(norm);
        if (!frame)
            throw Error(Errc::frame_not_found,
                        "no norm-" + norm.str() + " frame in E8 for the spill");
        if (frame_used == 8) {
            frame_block = slots.take_e8();
            frame_used = 0;
        }
        for (int r = 0; r < 8; ++r)
            t.at(slots.e8_row(frame_block, r), col) = frame->at(r, frame_used);
        ++frame_used;
    }
}

// Cases 5 and 6: even source into an odd target at degree d0 (any even
// for a signature-zero source; 2, 4 or 6 otherwise). Each source E8
// block maps into eight same-sign diagonal slots via the cube matrix;
// each source hyperbolic plane into one (+,-) slot pair.
void fill_even_to_odd(IntMatrix& t, const EvenSlots& src, const Int& d0,
                      OddSlots& slots) {
    const Int k = d0 / 2;
    if (src.e8_count > 0) {
        // only reachable with d0 in {2, 4, 6} (signature of the source nonzero)
        const IntMatrix cube = l_matrix(d0.convert_to<int>()).matrix;
        for (int b = 0; b < src.e8_count; ++b)
            for (int r = 0; r < 8; ++r) {
                const int row =
                    src.e8_sign == Sign::plus ? slots.take_plus() : slots.take_minus();
                for (int c = 0; c < 8; ++c) t.at(row, src.e8_row(b, c)) = cube.at(r, c);
            }
    }
    for (int b = 0; b < src.h_count; ++b) {
        const int a = slots.take_plus();
        const int m = slots.take_minus();
        const int col = src.h_row(b, 0);
        t.at(a, col) = 1;
        t.at(m, col) = 1;
        t.at(a, col + 1) = k;
        t.at(m, col + 1) = -k;
    }
}

// Writes the 16x8 block sending an E8 summand into eight hyperbolic
// planes at degree d0 in {4, 8, 12}: the degree-(d0/2) cube matrix read
// into <+-2>^8, then e1 +- e2 per plane.
void place_e8_into_h_blocks(IntMatrix& t, int src_col0, Sign sign, int d0,
                            EvenSlots& slots) {
    const IntMatrix half = l_matrix(d0 / 2).matrix;
    const Int s = sign == Sign::plus ? 1 : -1;
    for (int r = 0; r < 8; ++r) {
        const int h = slots.take_h();
        for (int c = 0; c < 8; ++c) {
            t.at(slots.h_row(h, 0), src_col0 + c) = half.at(r, c);
            t.at(slots.h_row(h, 1), src_col0 + c) = s * half.at(r, c);
        }
    }
}

// Cases 7 and 8: even source into an even target. A signature-zero
// source is hyperbolic planes only (any degree d0 >= 1, diag(1, d0) per
// plane). Otherwise d0 in {4, 8, 12}: with opposite signatures all
// source summands go into target hyperbolic planes; with equal signs the
// E8 summands fill the target E8 blocks first and only the excess spills
// into planes, eight planes per block.
void fill_even_to_even(IntMatrix& t, const EvenSlots& src, const FormInvariants& inv_n,
                       const FormInvariants& inv_m, const Int& d0, EvenSlots& slots) {
    const int sig_n = inv_n.sig();
    const int sig_m = inv_m.sig();
    if (sig_n != 0) {
        const int d_small = d0.convert_to<int>(); // in {4, 8, 12} here
        const bool same_strict_sign = (sig_n > 0 && sig_m > 0) || (sig_n < 0 && sig_m < 0);
        if (same_strict_sign) {
            const int into_e8 = std::min(src.e8_count, slots.e8_count);
            const IntMatrix block = e8_into_e8(d_small, src.e8_sign).matrix;
            for (int b = 0; b < into_e8; ++b) {
                const int eb = slots.take_e8();
                for (int r = 0; r < 8; ++r)
                    for (int c = 0; c < 8; ++c)
                        t.at(slots.e8_row(eb, r), src.e8_row(b, c)) = block.at(r, c);
            }
            for (int b = into_e8; b < src.e8_count; ++b)
                place_e8_into_h_blocks(t, src.e8_row(b, 0), src.e8_sign, d_small, slots);
        } else {
            for (int b = 0; b < src.e8_count; ++b)
                place_e8_into_h_blocks(t, src.e8_row(b, 0), src.e8_sign, d_small, slots);
        }
    }
    for (int b = 0; b < src.h_count; ++b) {
        const int h = slots.take_h();
        t.at(slots.h_row(h, 0), src.h_row(b, 0)) = 1;
        t.at(slots.h_row(h, 1), src.h_row(b, 1)) = d0;
    }
}

} // namespace

Embedding construct_embedding(const FormInvariants& inv_n,
                              const FormInvariants& inv_m, const Int& d) {
    if (degree_status(inv_n, inv_m, d) != DegreeStatus::guaranteed)
        throw Error(Errc::not_guaranteed,
                    "degree " + d.str() + " is not in the guaranteed family");

    const DegreeFamily family = guaranteed_degrees(inv_n, inv_m);
    Int d0 = d;
    Int h = 1;
    if (family.kind == DegreeFamily::Kind::square_closure) {
        bool split = false;
        for (Int hh = 1; hh * hh <= d; ++hh) {
            if (d % (hh * hh) != 0) continue;
            if (std::find(family.base.begin(), family.base.end(), d / (hh * hh)) !=
                family.base.end()) {
                h = hh;
                d0 = d / (hh * hh);
                split = true;
                break;
            }
        }
        if (!split)
            throw Error(Errc::internal, "guaranteed degree admits no base split");
    }

    const GramMatrix source = serre_normal_form(inv_n);
    const GramMatrix target = serre_normal_form(inv_m);
    IntMatrix t(target.rank(), source.rank());
    const int row = table_case(inv_n, inv_m);

    switch (row) {
        case 1:
        case 2: {
            OddSlots slots{inv_m.b2_plus, inv_m.b2_minus};
            if (d0 == 1)
                fill_identity_inclusion(t, inv_n.b2_plus, inv_n.b2_minus, slots);
            else
                fill_degree_five(t, inv_n.b2_plus, inv_n.b2_minus, slots);
            break;
        }
        case 3:
        case 4: {
            EvenSlots slots = EvenSlots::of(inv_m);
            fill_odd_to_even(t, inv_n.b2_plus, inv_n.b2_minus, d0 / 2, slots);
            break;
        }
        case 5:
        case 6: {
            OddSlots slots{inv_m.b2_plus, inv_m.b2_minus};
            fill_even_to_odd(t, EvenSlots::of(inv_n), d0, slots);
            break;
        }
        case 7:
        case 8: {
            EvenSlots slots = EvenSlots::of(inv_m);
            fill_even_to_even(t, EvenSlots::of(inv_n), inv_n, inv_m, d0, slots);
            break;
        }
        default: throw Error(Errc::internal, "unreachable table row");
    }

    Embedding base{d0, source, target, std::move(t)};
    if (!verify(base))
        throw Error(Errc::internal, "allocator produced an invalid certificate");
    return h == 1 ? base : amplify(base, h);
}

} // namespace latemb
