#pragma once

#include <optional>
#include <string>

#include "latemb/gram.hpp"

namespace latemb {

enum class Sign { plus, minus };

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

/// diag(+1 x p, -1 x q).
GramMatrix diag_form(int p, int q);

/// Direct sum of n hyperbolic planes [[0,1],[1,0]]; rank 2n.
GramMatrix hyperbolic_sum(int n);

/// The rank-8 even unimodular definite form (E8), or its negation.
GramMatrix e8_form(Sign sign);

/// nullopt when inv is realizable as a unimodular form of a smooth
/// closed 4-manifold: any odd (b2+, b2-), or an even pair whose
/// signature is a multiple of 8. Otherwise a message naming the failed
/// constraint.
std::optional<std::string> invariants_error(const FormInvariants& inv);

/// Throws Errc::invalid_invariants with the message from invariants_error.
void validate_invariants(const FormInvariants& inv);

/// Normal form realizing inv: diag(+1 x b2+, -1 x b2-) when odd;
/// (|sig|/8 copies of +-E8) then min(b2+, b2-) hyperbolic planes when
/// even. Summand order is fixed so embedding matrices are reproducible
/// byte for byte. Requires rank >= 1.
GramMatrix serre_normal_form(const FormInvariants& inv);

} // namespace latemb
