#include "latemb/standard_forms.hpp"

#include <cstdlib>

#include "latemb/error.hpp"

namespace latemb {

GramMatrix diag_form(int p, int q) {
    if (p < 0 || q < 0) throw Error(Errc::domain, "diag_form needs p, q >= 0");
    std::vector<Int> d;
    d.reserve(static_cast<size_t>(p) + q);
    for (int i = 0; i < p; ++i) d.emplace_back(1);
    for (int i = 0; i < q; ++i) d.emplace_back(-1);
    return GramMatrix::diagonal(d);
}

GramMatrix hyperbolic_sum(int n) {
    if (n < 0) throw Error(Errc::domain, "hyperbolic_sum needs n >= 0");
    IntMatrix m(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        m.at(2 * i, 2 * i + 1) = 1;
        m.at(2 * i + 1, 2 * i) = 1;
    }
    return GramMatrix(std::move(m));
}

GramMatrix e8_form(Sign sign) {
    static const int rows[8][8] = {
        {2, 1, 0, 0, 0, 0, 0, 0},
        {1, 2, 1, 0, 0, 0, 0, 0},
        {0, 1, 2, 1, 0, 0, 0, 0},
        {0, 0, 1, 2, 1, 0, 0, 0},
        {0, 0, 0, 1, 2, 1, 0, 1},
        {0, 0, 0, 0, 1, 2, 1, 0},
        {0, 0, 0, 0, 0, 1, 2, 0},
        {0, 0, 0, 0, 1, 0, 0, 2},
    };
    IntMatrix m(8, 8);
    const int s = sign == Sign::plus ? 1 : -1;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) m.at(i, j) = s * rows[i][j];
    return GramMatrix(std::move(m));
}

std::optional<std::string> invariants_error(const FormInvariants& inv) {
    if (inv.b2_plus < 0 || inv.b2_minus < 0)
        return "b2_plus and b2_minus must be nonnegative";
    if (inv.parity == Parity::odd) return std::nullopt;
    if (inv.sig() % 8 != 0)
        return "even form has signature " + std::to_string(inv.sig()) +
               ", not a multiple of 8";
    // min(b2+, b2-) = (rank - |sig|)/2 is automatically a nonnegative
    // integer once sig is a multiple of 8 and both b2 are nonnegative.
    return std::nullopt;
}

void validate_invariants(const FormInvariants& inv) {
    if (auto msg = invariants_error(inv))
        throw Error(Errc::invalid_invariants, *msg);
}

GramMatrix serre_normal_form(const FormInvariants& inv) {
    validate_invariants(inv);
    if (inv.rank() < 1)
        throw Error(Errc::invalid_invariants, "normal form requires rank >= 1");
    if (inv.parity == Parity::odd) return diag_form(inv.b2_plus, inv.b2_minus);
    const int sig = inv.sig();
    const int e8_copies = std::abs(sig) / 8;
    const Sign s = sig >= 0 ? Sign::plus : Sign::minus;
    const int h_copies = std::min(inv.b2_plus, inv.b2_minus);
    GramMatrix out; // E8 blocks first, then the hyperbolic block
    for (int i = 0; i < e8_copies; ++i) out = direct_sum(out, e8_form(s));
    return direct_sum(out, hyperbolic_sum(h_copies));
}

} // namespace latemb
