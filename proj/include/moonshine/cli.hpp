#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

namespace moonshine::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

enum class Format { Text, Json, Csv };

/// Environment variable holding the default working precision.
inline constexpr const char* kPrecisionEnv = "OGG_PREC";

struct Options {
    /// 0 means: use OGG_PREC if set, otherwise the per-command default.
    std::int64_t precision = 0;
    bool exact = false;
    bool allow_known_errata = true;
};

/// One command's output. `json` holds schemaVersion, command, parameters,
/// results and verdicts; `text` and `csv` are the human renderings.
struct ReportDocument {
    nlohmann::json json;
    std::string text;
    std::string csv;  // only filled by cmd_tables
    int exit_code = kExitOk;
};

ReportDocument cmd_tables(const Options& options);
ReportDocument cmd_prime(std::int64_t p, const Options& options);
ReportDocument cmd_ss(std::int64_t p, const Options& options);
ReportDocument cmd_ogg_scan(std::int64_t limit, const Options& options);
/// which: replicability | swisher | eqnC2.
ReportDocument cmd_verify(const std::string& which, std::int64_t p, const Options& options);

/// Deterministic serialization: sorted keys, two-space indent, trailing newline.
std::string to_json_text(const ReportDocument& doc);

/// Parses argv and runs one subcommand. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace moonshine::cli
