#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "latemb/gram.hpp"

namespace latemb {

/// Surgery presentation data of a 4-manifold 2-handlebody: one framing
/// per link component plus the symmetric linking matrix (its diagonal is
/// ignored; the framings take its place).
struct FramedLinkData {
    std::vector<Int> framings;
    std::vector<std::vector<Int>> linking;
};

/// Intersection-form Gram matrix of the presented 2-handlebody:
/// diagonal = framings, off-diagonal = linking numbers. Throws
/// Errc::asymmetric_linking on inconsistent input.
GramMatrix gram_from_framed_link(const FramedLinkData& data);

/// Invariants of a few named manifolds. Throws Errc::unknown_preset.
///   K3     -> (3, 19, even)      CP2    -> (1, 0, odd)
///   CP2bar -> (0, 1, odd)        S2xS2  -> (1, 1, even)
FormInvariants preset(std::string_view name);

std::vector<std::string> preset_names();

} // namespace latemb
