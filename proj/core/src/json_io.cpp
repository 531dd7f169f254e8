#include "latemb/json_io.hpp"

#include <limits>
#include <utility>

#include "latemb/error.hpp"

namespace latemb {

using nlohmann::json;

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw Error(Errc::parse, "malformed JSON");
    return j;
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const size_t digits = s.size() - (s.rfind('-', 0) == 0 ? 1 : 0);
        if (digits == 0 ||
            s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) != std::string::npos)
            throw Error(Errc::parse, "string is not a decimal integer");
        return Int(s);
    }
    throw Error(Errc::parse, "expected an integer");
}

json int_to_json(const Int& v) {
    // JSON numbers are only exact up to 2^53; larger values go as strings.
    static const Int kSafe = Int(1) << 53;
    if (v >= -kSafe && v <= kSafe) return json(v.convert_to<long long>());
    return json(v.str());
}

namespace {

std::vector<std::vector<Int>> int_rows_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw Error(Errc::parse, std::string(what) + " must be an array");
    std::vector<std::vector<Int>> rows;
    for (const json& row : j) {
        if (!row.is_array())
            throw Error(Errc::parse, std::string(what) + " rows must be arrays");
        std::vector<Int> r;
        for (const json& cell : row) r.push_back(int_from_json(cell));
        rows.push_back(std::move(r));
    }
    return rows;
}

json int_rows_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j, const char* what) {
    const auto rows = int_rows_from_json(j, what);
    try {
        return IntMatrix::from_rows(rows);
    } catch (const Error& e) {
        throw Error(Errc::parse, std::string(what) + ": " + e.what());
    }
}

} // namespace

GramMatrix gram_from_json(const json& j) {
    if (!j.is_object() || !j.contains("gram"))
        throw Error(Errc::parse, "lattice object needs a \"gram\" field");
    try {
        return GramMatrix(matrix_from_json(j.at("gram"), "gram"));
    } catch (const Error& e) {
        if (e.code() == Errc::parse) throw;
        throw Error(Errc::parse, std::string("gram: ") + e.what());
    }
}

json gram_to_json(const GramMatrix& g) {
    return json{{"gram", int_rows_to_json(g.matrix())}};
}

FormInvariants invariants_from_json(const json& j) {
    if (!j.is_object() || !j.contains("b2_plus") || !j.contains("b2_minus") ||
        !j.contains("parity"))
        throw Error(Errc::parse,
                    "invariants object needs b2_plus, b2_minus and parity");
    const Int p = int_from_json(j.at("b2_plus"));
    const Int q = int_from_json(j.at("b2_minus"));
    if (p < 0 || q < 0 || p > std::numeric_limits<int>::max() ||
        q > std::numeric_limits<int>::max())
        throw Error(Errc::parse, "b2_plus and b2_minus must be nonnegative integers");
    const std::string parity_name = j.at("parity").is_string()
                                        ? j.at("parity").get<std::string>()
                                        : std::string();
    Parity parity;
    if (parity_name == "even") parity = Parity::even;
    else if (parity_name == "odd") parity = Parity::odd;
    else throw Error(Errc::parse, "parity must be \"even\" or \"odd\"");
    return FormInvariants{p.convert_to<int>(), q.convert_to<int>(), parity};
}

json invariants_to_json(const FormInvariants& inv) {
    return json{{"b2_plus", inv.b2_plus},
                {"b2_minus", inv.b2_minus},
                {"parity", inv.parity == Parity::even ? "even" : "odd"}};
}

FramedLinkData framed_link_from_json(const json& j) {
    if (!j.is_object() || !j.contains("framings") || !j.contains("linking"))
        throw Error(Errc::parse, "framed link object needs framings and linking");
    if (!j.at("framings").is_array())
        throw Error(Errc::parse, "framings must be an array");
    FramedLinkData data;
    for (const json& cell : j.at("framings")) data.framings.push_back(int_from_json(cell));
    data.linking = int_rows_from_json(j.at("linking"), "linking");
    return data;
}

Embedding embedding_from_json(const json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("source_gram") ||
        !j.contains("target_gram") || !j.contains("matrix"))
        throw Error(Errc::parse,
                    "embedding object needs degree, source_gram, target_gram, matrix");
    const Int degree = int_from_json(j.at("degree"));
    if (degree < 1) throw Error(Errc::parse, "degree must be a positive integer");
    try {
        return Embedding{degree, GramMatrix(matrix_from_json(j.at("source_gram"), "source_gram")),
                         GramMatrix(matrix_from_json(j.at("target_gram"), "target_gram")),
                         matrix_from_json(j.at("matrix"), "matrix")};
    } catch (const Error& e) {
        if (e.code() == Errc::parse) throw;
        throw Error(Errc::parse, e.what());
    }
}

json embedding_to_json(const Embedding& e) {
    return json{{"degree", int_to_json(e.degree)},
                {"source_gram", int_rows_to_json(e.source.matrix())},
                {"target_gram", int_rows_to_json(e.target.matrix())},
                {"matrix", int_rows_to_json(e.matrix)}};
}

std::string covering_status_name(CoveringStatus s) {
    switch (s) {
        case CoveringStatus::guaranteed_covering: return "guaranteed-covering";
        case CoveringStatus::impossible: return "impossible";
        case CoveringStatus::unknown: return "unknown";
        case CoveringStatus::below_theorem_range: return "below-theorem-range";
    }
    return "unknown";
}

std::string degree_family_kind_name(DegreeFamily::Kind k) {
    switch (k) {
        case DegreeFamily::Kind::empty: return "empty";
        case DegreeFamily::Kind::all: return "all";
        case DegreeFamily::Kind::all_even: return "all_even";
        case DegreeFamily::Kind::square_closure: return "square_closure";
    }
    return "empty";
}

json report_to_json(const DecisionReport& report) {
    json guaranteed{{"kind", degree_family_kind_name(report.guaranteed.kind)}};
    json base = json::array();
    for (const Int& b : report.guaranteed.base) base.push_back(int_to_json(b));
    guaranteed["base"] = std::move(base);

    json obstructions = json::array();
    for (const Obstruction& o : report.obstructions)
        obstructions.push_back(json{{"kind", o.kind}, {"detail", o.detail}});

    json covering = json::object();
    for (const auto& [degree, status] : report.covering)
        covering[degree.str()] = covering_status_name(status);

    return json{{"embeddable", report.embeddable},
                {"case", report.applicable_case ? json(*report.applicable_case) : json()},
                {"guaranteed", std::move(guaranteed)},
                {"obstructions", std::move(obstructions)},
                {"covering", std::move(covering)},
                {"branch_regularity", json{{"4", "nodal"}, {"5+", "locally_flat"}}}};
}

} // namespace latemb
