#pragma once

// One function per CLI subcommand. Each parses its textual arguments, calls
// the library and renders both a JSON report and a plain-text summary.
// Parse and domain errors propagate as ParseError / DomainError.

#include "tightsf/json_writer.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tightsf {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "tightsf-report/1";

struct Report {
    std::string command;
    std::vector<std::string> args;
    Json result;
    std::string text;
    int exit_code = 0;

    /// Full envelope: schema, version, command, args, exact flag, result.
    std::string json() const;
};

Report cf_report(std::string_view slope);
Report bypass_report(std::string_view dividing, std::string_view ruling, std::string_view side, bool oracle);
Report seifert_report(std::string_view spec);
Report slopes_report(std::string_view spec, std::string_view n1, std::optional<std::string> n2 = {},
                     std::optional<std::string> n3 = {});
Report floer_report(long n, std::optional<std::pair<long, long>> index = {});
Report theta_report(std::string_view diagram_json);
Report classify_report(std::string_view spec);
Report selftest_report();

}  // namespace tightsf
