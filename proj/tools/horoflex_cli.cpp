#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "horoflex/report.hpp"

using namespace horoflex;
using nlohmann::json;

namespace {

json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        text = os.str();
    } else {
        std::ifstream f(path);
        if (!f) fail(Errc::BadInput, "cannot open " + path);
        std::ostringstream os;
        os << f.rdbuf();
        text = os.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Errc::BadInput, "invalid JSON in " + path);
    return j;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) fail(Errc::BadInput, "cannot open " + path + " for writing");
    f << text;
}

struct CommonOpts {
    std::string input = "-";
    std::string output;
    std::vector<std::string> bounds;
    std::string format = "json";
    bool quiet = false;
    bool strict = false;
    bool oracle = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("input", o.input, "input document (file or - for stdin)");
    cmd->add_option("-o,--output", o.output, "write the report here instead of stdout");
    cmd->add_option("--bounds", o.bounds, "override a bound, e.g. --bounds degree=20")
        ->take_all();
    cmd->add_option("--format", o.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_flag("--quiet", o.quiet, "print only the verdict");
    cmd->add_flag("--strict", o.strict, "exit 3 when the verdict is UNDECIDED");
    cmd->add_flag("--oracle", o.oracle, "cross-check the analysis against the brute-force oracle");
}

std::map<std::string, Int> parse_bound_overrides(const std::vector<std::string>& specs) {
    std::map<std::string, Int> out;
    for (const auto& s : specs) {
        auto eq = s.find('=');
        if (eq == std::string::npos) fail(Errc::BadInput, "expected --bounds key=value");
        out[s.substr(0, eq)] = Int(s.substr(eq + 1));
    }
    return out;
}

int run_analysis(const CommonOpts& o, ReportOptions ropt) {
    InputDocument in = parse_input(read_json(o.input));
    ropt.oracle_check = o.oracle;
    json report = analyze_document(in, parse_bound_overrides(o.bounds), ropt);
    std::string verdict = report.at("verdict").get<std::string>();

    if (o.oracle && report.at("oracle_check").get<std::string>() != "ok") {
        std::cerr << "oracle cross-check failed: " << report.at("oracle_check").get<std::string>()
                  << "\n";
        return 1;
    }
    if (o.quiet) {
        write_output(o.output, verdict + "\n");
    } else if (o.format == "text") {
        write_output(o.output, render_text(report));
    } else {
        write_output(o.output, report.dump(2) + "\n");
    }
    if (o.strict && verdict == "UNDECIDED") return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact flexibility analysis of affine horospherical varieties"};
    app.require_subcommand(1);

    CommonOpts analyze_o, flex_o, orbits_o, holes_o, roots_o, lnd_o;
    std::string verify_path;

    auto* analyze = app.add_subcommand("analyze", "full report with certificates");
    add_common(analyze, analyze_o);
    auto* flex = app.add_subcommand("flexibility", "verdict and regularity cone");
    add_common(flex, flex_o);
    auto* orbits = app.add_subcommand("orbits", "orbit lattice with dimensions");
    add_common(orbits, orbits_o);
    auto* holes = app.add_subcommand("holes", "holes of the weight semigroup up to the bound");
    add_common(holes, holes_o);
    auto* roots = app.add_subcommand("roots", "Demazure roots of sigma up to the height bound");
    add_common(roots, roots_o);
    auto* lnd = app.add_subcommand("lnd", "locally nilpotent derivation roots per significant ray");
    add_common(lnd, lnd_o);
    auto* verify = app.add_subcommand("verify", "replay all certificates of a report");
    verify->add_option("report", verify_path, "report document to verify")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            VerifyOutcome out = verify_report(read_json(verify_path));
            for (const auto& [name, ok] : out.checks)
                std::cout << (ok ? "[ ok ] " : "[FAIL] ") << name << "\n";
            std::cout << (out.ok ? "verify: all certificates replay\n"
                                 : "verify: certificate replay FAILED\n");
            return out.ok ? 0 : 1;
        }
        ReportOptions ropt;
        if (analyze->parsed()) {
            ropt.with_orbits = true;
            ropt.with_lnd = true;
            return run_analysis(analyze_o, ropt);
        }
        if (flex->parsed()) {
            ropt.with_orbits = false;
            return run_analysis(flex_o, ropt);
        }
        if (orbits->parsed()) {
            ropt.with_orbits = true;
            return run_analysis(orbits_o, ropt);
        }
        if (holes->parsed()) {
            ropt.with_orbits = false;
            ropt.with_holes = true;
            return run_analysis(holes_o, ropt);
        }
        if (roots->parsed()) {
            ropt.with_orbits = false;
            ropt.with_roots = true;
            return run_analysis(roots_o, ropt);
        }
        if (lnd->parsed()) {
            ropt.with_orbits = false;
            ropt.with_lnd = true;
            return run_analysis(lnd_o, ropt);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::BadInput || e.code() == Errc::NotDominant ||
                       e.code() == Errc::BadGroupSpec || e.code() == Errc::EmptyInput ||
                       e.code() == Errc::ShapeMismatch
                   ? 2
                   : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
