#include "cli_app.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "latemb/error.hpp"
#include "latemb/json_io.hpp"
#include "latemb/oracle.hpp"

namespace latemb::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::parse, "cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// An input argument is inline JSON when it looks like JSON, a file when
// one exists at that path, and a preset name otherwise.
json load_json_arg(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '['))
        return parse_json_text(arg);
    if (std::filesystem::exists(arg)) return parse_json_text(read_file(arg));
    try {
        return invariants_to_json(preset(arg));
    } catch (const Error&) {
        throw Error(Errc::parse, "'" + arg +
                                     "' is not inline JSON, an existing file, "
                                     "or a preset name");
    }
}

GramMatrix gram_arg(const std::string& arg) {
    const json j = load_json_arg(arg);
    if (j.is_object() && j.contains("gram")) return gram_from_json(j);
    throw Error(Errc::parse, "expected a lattice object {\"gram\": [[...]]}");
}

// Accepts an invariants object, a lattice object (classified on the
// fly), or a preset name.
FormInvariants invariants_arg(const std::string& arg) {
    const json j = load_json_arg(arg);
    if (j.is_object() && j.contains("gram")) return invariants(gram_from_json(j));
    return invariants_from_json(j);
}

void emit(const json& payload, const std::string& out_path, bool to_stdout,
          std::ostream& out) {
    const std::string text = payload.dump(2);
    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw Error(Errc::parse, "cannot write file '" + out_path + "'");
        file << text << "\n";
    }
    if (to_stdout || out_path.empty()) out << text << "\n";
}

std::string parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

std::string invariants_line(const FormInvariants& inv) {
    std::ostringstream s;
    s << "b2_plus=" << inv.b2_plus << ", b2_minus=" << inv.b2_minus << ", parity "
      << parity_name(inv.parity);
    return s.str();
}

int status_exit(DegreeStatus s) {
    switch (s) {
        case DegreeStatus::guaranteed: return kExitGuaranteed;
        case DegreeStatus::impossible: return kExitImpossible;
        default: return kExitUnknown;
    }
}

int covering_exit(CoveringStatus s) {
    switch (s) {
        case CoveringStatus::guaranteed_covering: return kExitGuaranteed;
        case CoveringStatus::impossible: return kExitImpossible;
        default: return kExitUnknown;
    }
}

std::string family_text(const DegreeFamily& family) {
    switch (family.kind) {
        case DegreeFamily::Kind::empty: return "none";
        case DegreeFamily::Kind::all: return "every degree d >= 1";
        case DegreeFamily::Kind::all_even: return "every even degree";
        case DegreeFamily::Kind::square_closure: {
            std::ostringstream s;
            s << "h^2*d for d in {";
            for (size_t i = 0; i < family.base.size(); ++i)
                s << (i ? ", " : "") << family.base[i];
            s << "} and any h >= 1";
            return s.str();
        }
    }
    return "none";
}

struct Options {
    std::string gram, source, target, output, input;
    Int degree = 0;
    Int bound = 10;
    bool assume_flag = false;
    bool json_output = false;
    bool has_degree = false;
};

int cmd_classify(const Options& opt, std::ostream& out) {
    const GramMatrix g = gram_arg(opt.gram);
    const Inertia in = signature(g);
    const Int det = determinant(g);
    const bool unimodular = det == 1 || det == -1;
    if (opt.json_output) {
        json j{{"rank", g.rank()},
               {"signature",
                json{{"n_plus", in.n_plus}, {"n_zero", in.n_zero}, {"n_minus", in.n_minus}}},
               {"parity", parity_name(parity(g))},
               {"determinant", int_to_json(det)},
               {"unimodular", unimodular}};
        emit(j, opt.output, true, out);
    } else {
        out << "rank " << g.rank() << ", signature (" << in.n_plus << "," << in.n_minus
            << ")";
        if (in.n_zero > 0) out << " with " << in.n_zero << " null directions";
        out << ", parity " << parity_name(parity(g)) << ", determinant " << det << ", "
            << (unimodular ? "unimodular" : "not unimodular") << "\n";
    }
    return unimodular ? kExitGuaranteed : kExitImpossible;
}

int cmd_normal_form(const Options& opt, std::ostream& out) {
    const FormInvariants inv = invariants_arg(opt.source);
    const GramMatrix g = serre_normal_form(inv);
    emit(gram_to_json(g), opt.output, opt.json_output, out);
    return kExitGuaranteed;
}

int cmd_decide(const Options& opt, std::ostream& out) {
    const FormInvariants inv_n = invariants_arg(opt.source);
    const FormInvariants inv_m = invariants_arg(opt.target);
    std::vector<Int> degrees;
    if (opt.has_degree) degrees.push_back(opt.degree);
    const DecisionReport report =
        covering_report(inv_n, inv_m, opt.assume_flag, degrees);

    if (opt.json_output) {
        emit(report_to_json(report), opt.output, true, out);
    } else {
        out << "source: " << invariants_line(inv_n) << "\n";
        out << "target: " << invariants_line(inv_m) << "\n";
        out << "embeddable for some degree: " << (report.embeddable ? "yes" : "no")
            << "\n";
        if (report.applicable_case)
            out << "table case: " << *report.applicable_case << "\n";
        out << "guaranteed degrees: " << family_text(report.guaranteed) << "\n";
        for (const Obstruction& o : report.obstructions)
            out << "obstruction [" << o.kind << "]: " << o.detail << "\n";
        for (const auto& [d, status] : report.covering) {
            out << "degree " << d << ": " << covering_status_name(status);
            if (status == CoveringStatus::guaranteed_covering)
                out << ", branch set: "
                    << (branch_regularity(d) == BranchRegularity::nodal ? "nodal"
                                                                        : "locally flat");
            out << "\n";
        }
        if (opt.has_degree && !opt.assume_flag) {
            const DegreeStatus ds = degree_status(inv_n, inv_m, opt.degree);
            out << "degree " << opt.degree << " embedding: "
                << (ds == DegreeStatus::guaranteed  ? "guaranteed"
                    : ds == DegreeStatus::impossible ? "impossible"
                                                     : "unknown")
                << "\n";
        }
    }

    if (opt.has_degree) {
        if (opt.assume_flag) return covering_exit(report.covering.front().second);
        return status_exit(degree_status(inv_n, inv_m, opt.degree));
    }
    return report.embeddable ? kExitGuaranteed : kExitImpossible;
}

int cmd_embed(const Options& opt, std::ostream& out) {
    const FormInvariants inv_n = invariants_arg(opt.source);
    const FormInvariants inv_m = invariants_arg(opt.target);
    if (!opt.has_degree) throw Error(Errc::parse, "embed requires --degree");
    const DegreeStatus status = degree_status(inv_n, inv_m, opt.degree);
    if (status != DegreeStatus::guaranteed) {
        out << "degree " << opt.degree << " is "
            << (status == DegreeStatus::impossible ? "impossible" : "not guaranteed")
            << " for this pair; no certificate constructed\n";
        return status_exit(status);
    }
    const Embedding e = construct_embedding(inv_n, inv_m, opt.degree);
    if (opt.json_output || !opt.output.empty()) {
        emit(embedding_to_json(e), opt.output, opt.json_output, out);
    }
    if (!opt.json_output)
        out << "constructed degree-" << opt.degree
            << " certificate between the Serre normal forms (" << e.target.rank() << "x"
            << e.source.rank() << " matrix); verify() holds\n";
    return kExitGuaranteed;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    const json j = load_json_arg(opt.input);
    const Embedding e = embedding_from_json(j);
    const bool ok = verify(e);
    if (opt.json_output) {
        emit(json{{"valid", ok}}, opt.output, true, out);
    } else {
        out << (ok ? "OK" : "FAIL: certificate identity does not hold") << "\n";
    }
    return ok ? kExitGuaranteed : kExitImpossible;
}

int cmd_search(const Options& opt, std::ostream& out) {
    const GramMatrix gn = gram_arg(opt.source);
    const GramMatrix gm = gram_arg(opt.target);
    if (!opt.has_degree) throw Error(Errc::parse, "search requires --degree");
    const SearchOutcome outcome = brute_force_embedding(gn, gm, opt.degree, opt.bound);
    switch (outcome.status) {
        case SearchOutcome::Status::found:
            if (opt.json_output || !opt.output.empty())
                emit(embedding_to_json(*outcome.embedding), opt.output, opt.json_output,
                     out);
            if (!opt.json_output)
                out << "found and verified a degree-" << opt.degree << " embedding\n";
            return kExitGuaranteed;
        case SearchOutcome::Status::none:
            if (opt.json_output)
                emit(json{{"found", false}, {"conclusive", true}}, opt.output, true, out);
            else out << "no embedding exists (exhaustive search over a definite target)\n";
            return kExitImpossible;
        case SearchOutcome::Status::none_bounded:
            if (opt.json_output)
                emit(json{{"found", false}, {"conclusive", false}}, opt.output, true, out);
            else
                out << "no embedding found within |coordinate| <= " << opt.bound
                    << " (inconclusive)\n";
            return kExitUnknown;
    }
    return kExitInternalError;
}

int cmd_from_link(const Options& opt, std::ostream& out) {
    const json j = load_json_arg(opt.input);
    const GramMatrix g = gram_from_framed_link(framed_link_from_json(j));
    emit(gram_to_json(g), opt.output, opt.json_output, out);
    return kExitGuaranteed;
}

int cmd_preset(const Options& opt, std::ostream& out) {
    const FormInvariants inv = preset(opt.input);
    if (opt.json_output) emit(invariants_to_json(inv), opt.output, true, out);
    else out << opt.input << ": " << invariants_line(inv) << "\n";
    return kExitGuaranteed;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"exact isometric-embedding calculator for intersection forms"};
    app.require_subcommand(1);
    Options opt;

    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", opt.json_output); };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", opt.output, "write result to this file");
    };
    std::string degree_raw, bound_raw;
    auto add_degree = [&](CLI::App* cmd, bool required) {
        auto* o = cmd->add_option("--degree", degree_raw, "scaling degree d >= 1");
        if (required) o->required();
    };

    CLI::App* classify = app.add_subcommand("classify", "rank/signature/parity of a lattice");
    classify->add_option("--gram", opt.gram, "lattice file or inline JSON")->required();
    add_json(classify);
    add_output(classify);

    CLI::App* normal = app.add_subcommand("normal-form", "Serre normal form of invariants");
    normal->add_option("--source", opt.source, "invariants, lattice or preset")->required();
    add_json(normal);
    add_output(normal);

    CLI::App* decide = app.add_subcommand("decide", "guaranteed degrees and covering report");
    decide->add_option("--source", opt.source)->required();
    decide->add_option("--target", opt.target)->required();
    add_degree(decide, false);
    decide->add_flag("--assume-no-1-3-handles", opt.assume_flag,
                     "assert the source manifold has a handle decomposition "
                     "with no 1- and 3-handles");
    add_json(decide);
    add_output(decide);

    CLI::App* embed = app.add_subcommand("embed", "construct an embedding certificate");
    embed->add_option("--source", opt.source)->required();
    embed->add_option("--target", opt.target)->required();
    add_degree(embed, true);
    add_json(embed);
    add_output(embed);

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a certificate file");
    verify_cmd->add_option("input", opt.input, "embedding file or inline JSON")->required();
    add_json(verify_cmd);
    add_output(verify_cmd);

    CLI::App* search = app.add_subcommand("search", "oracle brute-force embedding search");
    search->add_option("--source", opt.source, "source lattice")->required();
    search->add_option("--target", opt.target, "target lattice")->required();
    add_degree(search, true);
    search->add_option("--bound", bound_raw, "coordinate box bound for indefinite targets");
    add_json(search);
    add_output(search);

    CLI::App* from_link = app.add_subcommand("from-link", "framed link data to lattice");
    from_link->add_option("input", opt.input, "framed link file or inline JSON")->required();
    add_json(from_link);
    add_output(from_link);

    CLI::App* preset_cmd = app.add_subcommand("preset", "invariants of a named manifold");
    preset_cmd->add_option("name", opt.input, "preset name")->required();
    add_json(preset_cmd);
    add_output(preset_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends print through CLI11's own stream
            std::ostringstream help;
            const int code = app.exit(e, help, help);
            out << help.str();
            return code;
        }
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        try {
            if (!degree_raw.empty()) {
                opt.degree = Int(degree_raw);
                opt.has_degree = true;
            }
            if (!bound_raw.empty()) opt.bound = Int(bound_raw);
        } catch (const std::exception&) {
            throw Error(Errc::parse, "--degree and --bound must be decimal integers");
        }
        if (opt.has_degree && opt.degree < 1)
            throw Error(Errc::parse, "--degree must be >= 1");
        if (opt.bound < 1) throw Error(Errc::parse, "--bound must be >= 1");
        if (classify->parsed()) return cmd_classify(opt, out);
        if (normal->parsed()) return cmd_normal_form(opt, out);
        if (decide->parsed()) return cmd_decide(opt, out);
        if (embed->parsed()) return cmd_embed(opt, out);
        if (verify_cmd->parsed()) return cmd_verify(opt, out);
        if (search->parsed()) return cmd_search(opt, out);
        if (from_link->parsed()) return cmd_from_link(opt, out);
        if (preset_cmd->parsed()) return cmd_preset(opt, out);
        err << "error: no subcommand\n";
        return kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.is_input_error() ? kExitInputError : kExitInternalError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
}

} // namespace latemb::cli
