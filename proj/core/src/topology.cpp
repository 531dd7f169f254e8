#include "latemb/topology.hpp"

#include <utility>

#include "latemb/error.hpp"

namespace latemb {

GramMatrix gram_from_framed_link(const FramedLinkData& data) {
    const int n = static_cast<int>(data.framings.size());
    if (static_cast<int>(data.linking.size()) != n)
        throw Error(Errc::asymmetric_linking,
                    "linking matrix size does not match component count");
    for (const auto& row : data.linking)
        if (static_cast<int>(row.size()) != n)
            throw Error(Errc::asymmetric_linking, "linking matrix is ragged");
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = data.framings[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j) {
            if (i == j) continue; // diagonal of the linking matrix is ignored
            if (data.linking[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                data.linking[static_cast<size_t>(j)][static_cast<size_t>(i)])
                throw Error(Errc::asymmetric_linking,
                            "linking numbers must be symmetric");
            m.at(i, j) = data.linking[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
    }
    return GramMatrix(std::move(m));
}

namespace {

struct PresetEntry {
    const char* name;
    FormInvariants inv;
};

// K3 from its known Betti data; the others come from one-component
// surgery descriptions (+1-framed unknot, 0-framed Hopf link).
const PresetEntry kPresets[] = {
    {"K3", {3, 19, Parity::even}},
    {"CP2", {1, 0, Parity::odd}},
    {"CP2bar", {0, 1, Parity::odd}},
    {"S2xS2", {1, 1, Parity::even}},
};

} // namespace

FormInvariants preset(std::string_view name) {
    for (const PresetEntry& entry : kPresets)
        if (name == entry.name) return entry.inv;
    throw Error(Errc::unknown_preset, "unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const PresetEntry& entry : kPresets) names.emplace_back(entry.name);
    return names;
}

} // namespace latemb
