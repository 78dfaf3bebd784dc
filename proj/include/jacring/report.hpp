#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jacring/instance.hpp"

namespace jacring {

inline constexpr const char* kToolName = "jacring";
inline constexpr const char* kToolVersion = "1.0.0";

/// Machine-readable report. Everything except `timings` is canonical:
/// identical inputs produce byte-identical canonical sections.
struct ReportDocument {
    std::string command;
    nlohmann::ordered_json canonical;  // instance summary, result tables, verdicts
    nlohmann::ordered_json timings;

    nlohmann::ordered_json to_json() const;
    std::string canonical_dump() const;
    static ReportDocument from_json(const nlohmann::ordered_json& j);

    bool operator==(const ReportDocument& other) const;
};

struct CommandOptions {
    std::optional<int> degree;
    std::optional<std::pair<int, int>> degree_range;
    std::optional<int> nmax;
    std::optional<long> budget;
    std::string json_path;  // machine-readable output target, empty = none
    bool strict_parity = false;
};

/// Parses and validates one instance file; throws ParseError on any defect,
/// including declared points that are not singular.
Hypersurface parse_instance(const std::string& path, const CommandOptions& opts = {});
Hypersurface parse_instance_json(const nlohmann::ordered_json& j,
                                 const CommandOptions& opts = {});

/// Serializes an instance back to the file schema (used by generators/tests).
nlohmann::ordered_json instance_to_json(const Hypersurface& h);

/// Runs one CLI command; human-readable output goes to `out`. Returns the
/// process exit code: 0 ok, 1 usage/parse, 2 hypotheses not satisfied,
/// 3 consistency failure, 4 budget exceeded.
int run_command(const std::string& command, const std::vector<std::string>& instance_paths,
                const CommandOptions& opts, std::ostream& out,
                ReportDocument* document = nullptr);

}  // namespace jacring
