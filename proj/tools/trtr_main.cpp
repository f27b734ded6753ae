#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "traintrack/dsl.hpp"
#include "traintrack/json_io.hpp"
#include "traintrack/render.hpp"
#include "traintrack/twocells.hpp"

namespace {

using namespace traintrack;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string colours = "a,b,c";
    std::uint64_t seed = 0;
    int handedness = +1;
    std::string format = "text";
    std::size_t budget = 50;
};

ColourSet make_colours(const std::string& list) {
    std::vector<std::string> names;
    std::string name;
    std::istringstream in(list);
    while (std::getline(in, name, ','))
        if (!name.empty()) names.push_back(name);
    return ColourSet(names);
}

// Braid arguments are inline JSON, or @path to read a file.
json load_json_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) fail(ErrorCode::ParseError, "cannot open file: " + arg.substr(1));
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) fail(ErrorCode::ParseError, "invalid JSON: " + arg);
    return parsed;
}

ColourWord parse_colour_word(const std::string& list, const ColourSet& colours) {
    std::vector<std::string> names;
    std::string name;
    std::istringstream in(list);
    while (std::getline(in, name, ','))
        if (!name.empty()) names.push_back(name);
    return colours.word_of(names);
}

std::string braid_text(const braids::ColouredBraid& b) {
    if (b.word.empty()) return "(identity)";
    std::string out;
    for (std::size_t i = 0; i < b.word.size(); ++i) {
        if (i) out += ' ';
        out += (b.word[i].sign > 0 ? 's' : 'S');
        out += std::to_string(b.word[i].index);
    }
    return out;
}

void point_at_span(std::ostream& out, const std::string& text, const SpannedError& e) {
    out << text << '\n';
    std::string marker(text.size() + 1, ' ');
    for (std::size_t i = e.span_begin(); i < e.span_end() && i < marker.size(); ++i)
        marker[i] = '^';
    if (e.span_begin() >= e.span_end() && e.span_begin() < marker.size())
        marker[e.span_begin()] = '^';
    out << marker << '\n';
}

bool is_usage_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
        case ErrorCode::ArityError:
        case ErrorCode::UnknownColour:
        case ErrorCode::PreconditionViolation:
        case ErrorCode::WidthViolation:
        case ErrorCode::EmptyObject:
        case ErrorCode::BoundaryMismatch:
            return true;
        default:
            return false;
    }
}

int run(int argc, char** argv) {
    CLI::App app{"train-track diagram and coloured-braid toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--colours", opt.colours, "comma-separated train colour names")
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "random seed for verification suites")
        ->capture_default_str();
    app.add_option("--handedness", opt.handedness, "crossing sign convention, +1 or -1")
        ->check(CLI::IsMember({1, -1}))
        ->capture_default_str();
    app.add_option("--format", opt.format, "output format: text, json, ascii, or svg")
        ->check(CLI::IsMember({"text", "json", "ascii", "svg"}))
        ->capture_default_str();
    app.add_option("--budget", opt.budget, "randomized instances per verification suite")
        ->capture_default_str();

    std::string expr, expr2, word1, word2, suite;

    CLI::App* canon = app.add_subcommand("canon", "canonical form of a diagram expression");
    canon->add_option("expr", expr, "diagram expression")->required();

    CLI::App* eq = app.add_subcommand("eq", "decide equality of two diagram expressions");
    eq->add_option("lhs", expr, "diagram expression")->required();
    eq->add_option("rhs", expr2, "diagram expression")->required();

    CLI::App* theta_cmd = app.add_subcommand("theta", "x-ordered train colour word of a diagram");
    theta_cmd->add_option("expr", expr, "diagram expression")->required();

    CLI::App* braid_eq = app.add_subcommand("braid-eq", "decide equality of two braids");
    braid_eq->add_option("lhs", word1, "braid JSON, or @file")->required();
    braid_eq->add_option("rhs", word2, "braid JSON, or @file")->required();

    CLI::App* contract_cmd =
        app.add_subcommand("contract", "contraction certificate of a diagram");
    contract_cmd->add_option("expr", expr, "diagram expression")->required();

    CLI::App* braiding = app.add_subcommand("braiding", "braid of the tile move T_{f,g}");
    braiding->add_option("f", word1, "comma-separated colour word")->required();
    braiding->add_option("g", word2, "comma-separated colour word")->required();

    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suites_help;
    for (const std::string& name : twocells::axiom_suite_names())
        suites_help += (suites_help.empty() ? "" : ", ") + name;
    verify->add_option("suite", suite, "one of: " + suites_help)->required();

    CLI::App* render_cmd = app.add_subcommand("render", "picture of a diagram");
    render_cmd->add_option("expr", expr, "diagram expression")->required();

    // Accept the global options after the subcommand as well.
    for (CLI::App* sub : {canon, eq, theta_cmd, braid_eq, contract_cmd, braiding, verify, render_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    ColourSet colours = make_colours(opt.colours);
    twocells::CellContext ctx{opt.handedness};
    const std::string* dsl_text = &expr; // for span-pointing diagnostics

    try {
        if (canon->parsed()) {
            diagrams::DiagramWord d = diagrams::canonicalize(dsl::parse_dsl(expr, colours));
            if (opt.format == "json")
                std::cout << jsonio::diagram_to_json(d, colours).dump(2) << '\n';
            else if (opt.format == "ascii")
                std::cout << render::render_diagram_ascii(d, colours);
            else if (opt.format == "svg")
                std::cout << render::render_diagram_svg(d, colours);
            else
                std::cout << dsl::print_dsl(d, colours) << '\n';
            return kExitOk;
        }
        if (eq->parsed()) {
            diagrams::DiagramWord lhs = dsl::parse_dsl(expr, colours);
            dsl_text = &expr2;
            diagrams::DiagramWord rhs = dsl::parse_dsl(expr2, colours);
            bool equal = diagrams::equals(lhs, rhs);
            std::cout << (equal ? "equal" : "different") << '\n';
            return equal ? kExitOk : kExitVerificationFailure;
        }
        if (theta_cmd->parsed()) {
            ColourWord word = geometry::theta(dsl::parse_dsl(expr, colours)).word;
            if (opt.format == "json") {
                std::cout << jsonio::theta_to_json(word, colours).dump() << '\n';
            } else {
                std::vector<std::string> names = colours.names_of(word);
                for (std::size_t i = 0; i < names.size(); ++i)
                    std::cout << (i ? " " : "") << names[i];
                std::cout << '\n';
            }
            return kExitOk;
        }
        if (braid_eq->parsed()) {
            braids::ColouredBraid lhs = jsonio::braid_from_json(load_json_arg(word1), colours);
            braids::ColouredBraid rhs = jsonio::braid_from_json(load_json_arg(word2), colours);
            bool equal = braids::braids_equal(lhs, rhs);
            std::cout << (equal ? "equal" : "different") << '\n';
            return equal ? kExitOk : kExitVerificationFailure;
        }
        if (contract_cmd->parsed()) {
            diagrams::DiagramWord d = dsl::parse_dsl(expr, colours);
            diagrams::ContractionCertificate cert = diagrams::contract(d);
            std::string why;
            if (!diagrams::validate_certificate(d, cert, &why)) {
                std::cerr << "certificate failed validation: " << why << '\n';
                return kExitVerificationFailure;
            }
            if (opt.format == "json") {
                std::cout << jsonio::certificate_to_json(cert).dump(2) << '\n';
            } else {
                for (const diagrams::ContractionStep& step : cert.steps) {
                    if (step.kind == diagrams::ContractionStep::Kind::EraseUnaryNode)
                        std::cout << "erase node " << step.node << '\n';
                    else
                        std::cout << "delete edge (" << step.edge.level << ","
                                  << step.edge.strand << ")\n";
                }
                std::cout << cert.steps.size() << " steps, certificate valid\n";
            }
            return kExitOk;
        }
        if (braiding->parsed()) {
            ColourWord f = parse_colour_word(word1, colours);
            ColourWord g = parse_colour_word(word2, colours);
            braids::ColouredBraid b = twocells::extract_braid(twocells::braiding_cell(f, g), ctx);
            if (opt.format == "json")
                std::cout << jsonio::braid_to_json(b, colours).dump(2) << '\n';
            else if (opt.format == "ascii")
                std::cout << render::render_braid_ascii(b, colours);
            else if (opt.format == "svg")
                std::cout << render::render_braid_svg(b, colours);
            else
                std::cout << braid_text(b) << '\n';
            return kExitOk;
        }
        if (verify->parsed()) {
            twocells::Report report =
                twocells::run_axiom_suite(suite, opt.budget, opt.seed, colours, ctx);
            if (opt.format == "json") {
                std::cout << jsonio::report_to_json(report).dump(2) << '\n';
            } else {
                std::cout << report.check << ": instances=" << report.instances
                          << " failures=" << report.failures.size() << '\n';
                for (const twocells::Failure& failure : report.failures)
                    std::cout << "  " << failure.instance << "\n    lhs: " << failure.lhs
                              << "\n    rhs: " << failure.rhs << '\n';
            }
            return report.passed() ? kExitOk : kExitVerificationFailure;
        }
        if (render_cmd->parsed()) {
            diagrams::DiagramWord d = dsl::parse_dsl(expr, colours);
            if (opt.format == "svg")
                std::cout << render::render_diagram_svg(d, colours);
            else
                std::cout << render::render_diagram_ascii(d, colours);
            return kExitOk;
        }
    } catch (const SpannedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        point_at_span(std::cerr, *dsl_text, e);
        return kExitUsage;
    } catch (const TrainTrackError& e) {
        std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << '\n';
        return is_usage_error(e.code()) ? kExitUsage : kExitVerificationFailure;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
