#pragma once

// Subcommands of the orbitcodes CLI as library calls. Each command builds a
// JSON report; run_command renders it as JSON or as indented text and maps
// errors to exit codes.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "orbitcodes/gf.hpp"
#include "orbitcodes/orbit.hpp"

namespace orbitcodes {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitNotFound = 4;

enum class OutputFormat { text, json };

struct RunConfig {
    std::string subcommand;
    std::uint64_t q = 2;
    std::optional<std::size_t> n;
    std::optional<std::size_t> k;
    std::string polynomial;
    /// Explicit starting point (analyze, pluecker) or ball candidate.
    std::optional<std::string> rows;
    /// Ball center; defaults to rs[I_k | 0].
    std::optional<std::string> center;
    std::optional<std::size_t> t;
    std::optional<int> target;
    OutputFormat format = OutputFormat::text;
    std::uint64_t log_table_cap = kDefaultLogTableCap;
    std::uint64_t node_budget = 1'000'000;
    bool count = false;
    std::optional<std::string> output_path;
};

struct CommandResult {
    int exit_code = kExitOk;
    std::string output;
    std::string error;
    nlohmann::ordered_json report;
};

nlohmann::ordered_json cmd_spread(const RunConfig& config);
nlohmann::ordered_json cmd_analyze(const RunConfig& config);
nlohmann::ordered_json cmd_pluecker(const RunConfig& config);
nlohmann::ordered_json cmd_ball(const RunConfig& config);
/// Sets "found": false when the search comes back empty; run_command turns that into exit 4.
nlohmann::ordered_json cmd_design(const RunConfig& config);

CommandResult run_command(const RunConfig& config);

std::string render_text(const nlohmann::ordered_json& report);

/// JSON form of an orbit code: generator polynomial, RREF rows, period, distance.
nlohmann::ordered_json orbit_code_json(const OrbitCode& code, const PolyFq& generator_polynomial);

/// Re-parses an orbit-code report and recomputes it by brute force; true iff
/// the codewords, period and minimum distance all match.
bool verify_orbit_report(const nlohmann::json& report);

}  // namespace orbitcodes
