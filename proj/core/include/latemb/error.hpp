#pragma once

#include <stdexcept>
#include <string>

namespace latemb {

/// Error categories used across the library. Input-shaped problems
/// (parse, domain, invalid invariants, ...) are distinguished from
/// internal defects (a constructor whose certificate fails its own
/// verification) so callers can map them to different exit paths.
enum class Errc {
    parse,                 // malformed JSON / file input
    domain,                // argument outside an operation's domain
    not_unimodular,        // |det| != 1 where unimodularity is required
    degenerate,            // zero inertia index where nondegeneracy is required
    zero_scale,            // scale(G, 0)
    dimension_mismatch,    // certificate dimensions inconsistent
    chain_mismatch,        // compose(): inner target != outer source
    degree_mismatch,       // direct_sum_embed(): unequal degrees
    unsupported_degree,    // degree outside a constructor's finite range
    frame_not_found,       // expected orthogonal frame missing (search failure)
    not_positive_definite, // enumeration requires a positive definite form
    invalid_invariants,    // (b2+, b2-, parity) not realizable
    not_guaranteed,        // construct_embedding() outside the guaranteed family
    allocation_infeasible, // summand allocator contradiction (internal)
    asymmetric_linking,    // framed-link matrix not symmetric
    unknown_preset,        // preset name not registered
    internal,              // hard defect: an internal verification failed
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

    /// True for errors caused by caller-supplied data rather than a
    /// defect in the library itself.
    bool is_input_error() const noexcept {
        return code_ != Errc::internal && code_ != Errc::allocation_infeasible &&
               code_ != Errc::frame_not_found;
    }

private:
    Errc code_;
};

} // namespace latemb
