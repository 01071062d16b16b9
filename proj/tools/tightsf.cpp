// tightsf command-line front end. Every subcommand forwards to the C API.

#include "tightsf/tightsf.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

struct Output {
    bool json = false;
};

// Prints a report (or the error) and returns the process exit code.
int finish(tsf_status status, tsf_report*& report, const Output& out)
{
    if (status != TSF_OK) {
        std::cerr << "error: " << tsf_last_error() << "\n";
        return 1;
    }
    std::cout << (out.json ? tsf_report_json(report) : tsf_report_text(report));
    int code = tsf_report_exit_code(report);
    tsf_report_free(report);
    return code;
}

std::size_t terminal_width()
{
    if (const char* w = std::getenv("TIGHTSF_WIDTH")) {
        char* end = nullptr;
        long v = std::strtol(w, &end, 10);
        if (end != w && *end == '\0' && v >= 40 && v <= 1000)
            return static_cast<std::size_t>(v);
    }
    return 80;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Tight contact structures on small Seifert fibered spaces"};
    app.set_version_flag("--version", std::string(tsf_version()));
    app.require_subcommand(1);
    app.get_formatter()->column_width(terminal_width() / 3);

    Output out;
    int code = 0;
    auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", out.json, "Print the JSON report"); };

    std::string slope;
    auto* cf = app.add_subcommand("cf", "Negative continued fraction of a slope x < -1");
    cf->add_option("slope", slope, "Slope such as -7/5")->required();
    json_flag(cf);
    cf->callback([&] {
        tsf_report* r = nullptr;
        code = finish(tsf_cmd_cf(slope.c_str(), &r), r, out);
    });

    std::string dividing, ruling, side = "front";
    bool oracle = false;
    auto* bypass = app.add_subcommand("bypass", "Dividing slope after a bypass attachment");
    bypass->add_option("--dividing", dividing, "Current dividing slope")->required();
    bypass->add_option("--ruling", ruling, "Ruling slope")->required();
    bypass->add_option("--side", side, "front or back")->capture_default_str();
    bypass->add_flag("--oracle", oracle, "Also run the exhaustive search");
    json_flag(bypass);
    bypass->callback([&] {
        tsf_report* r = nullptr;
        code = finish(tsf_cmd_bypass(dividing.c_str(), ruling.c_str(), side.c_str(), oracle, &r), r, out);
    });

    std::string spec;
    auto* seifert = app.add_subcommand("seifert", "Normalized Seifert data, |H1| and plumbing matrix");
    seifert->add_option("spec", spec, "\"e0;r1,r2,r3\" or \"r1,r2,r3\"")->required();
    json_flag(seifert);
    seifert->callback([&] {
        tsf_report* r = nullptr;
        code = finish(tsf_cmd_seifert(spec.c_str(), &r), r, out);
    });

    std::string n1, n2, n3;
    auto* slopes = app.add_subcommand("slopes", "Measured slopes and the slope on dV3");
    slopes->add_option("spec", spec, "\"e0;r1,r2,r3\" or \"r1,r2,r3\"")->required();
    slopes->add_option("--n1", n1, "Twisting number of V1 (negative)")->required();
    auto* n2_opt = slopes->add_option("--n2", n2, "Twisting number of V2");
    auto* n3_opt = slopes->add_option("--n3", n3, "Twisting number of V3");
    json_flag(slopes);
    slopes->callback([&] {
        tsf_report* r = nullptr;
        code = finish(tsf_cmd_slopes(spec.c_str(), n1.c_str(), n2_opt->count() ? n2.c_str() : nullptr,
                                     n3_opt->count() ? n3.c_str() : nullptr, &r),
                      r, out);
    });

    long floer_n = 0;
    std::string index;
    auto* floer = app.add_subcommand("floer", "Contact classes on M_n in the Stein basis");
    floer->add_option("--n", floer_n, "n >= 1")->required();
    auto* index_opt = floer->add_option("--index", index, "Single class i,j");
    json_flag(floer);
    floer->callback([&] {
        long i = 0, j = 0;
        if (index_opt->count()) {
            std::istringstream in(index);
            char comma = 0;
            if (!(in >> i >> comma >> j) || comma != ',' || !in.eof()) {
                std::cerr << "error: --index expects i,j\n";
                code = 1;
                return;
            }
        }
        tsf_report* r = nullptr;
        code = finish(tsf_cmd_floer(floer_n, index_opt->count() > 0, i, j, &r), r, out);
    });

    std::string diagram;
    auto* theta = app.add_subcommand("theta", "theta = c1^2 - 3 sigma - 2 chi of a Stein handlebody");
    theta->add_option("--diagram", diagram, "JSON file {\"L\": [[...]], \"rot\": [...]}")->required();
    json_flag(theta);
    theta->callback([&] {
        std::ifstream in(diagram);
        if (!in) {
            std::cerr << "error: cannot read " << diagram << "\n";
            code = 1;
            return;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        tsf_report* r = nullptr;
        code = finish(tsf_cmd_theta(buf.str().c_str(), &r), r, out);
    });

    auto* classify = app.add_subcommand("classify", "Count tight contact structures on M(e0; r1, r2, r3)");
    classify->add_option("spec", spec, "\"e0;r1,r2,r3\" or \"r1,r2,r3\"")->required();
    json_flag(classify);
    classify->callback([&] {
        tsf_report* r = nullptr;
        code = finish(tsf_cmd_classify(spec.c_str(), &r), r, out);
    });

    auto* selftest = app.add_subcommand("selftest", "Run the built-in exhaustive identity suites");
    json_flag(selftest);
    selftest->callback([&] {
        tsf_report* r = nullptr;
        code = finish(tsf_cmd_selftest(&r), r, out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    return code;
}
