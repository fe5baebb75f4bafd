#pragma once

// Config parsing, result documents and the subcommands behind the dmuproj
// executable. Every command is a pure function from a parsed config to an
// exit status plus the bytes to emit.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "dmu/errors.hpp"
#include "dmu/measure.hpp"
#include "dmu/oracle.hpp"
#include "dmu/projection.hpp"
#include "dmu/series.hpp"

namespace dmu::cli {

/// Exit-code contract of the executable.
enum ExitCode : int {
    kOk = 0,
    kConfigError = 2,
    kUnsupportedDegree = 3,
    kConsistencyFailure = 4,
    kValidationFailed = 5,
};

enum class Format { kJson, kCsv };

/// Schema violation; `field` is the dotted path of the offending entry.
class ConfigError : public InvalidArgument {
public:
    ConfigError(std::string field, const std::string& message);
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

struct RunConfig {
    std::optional<AtomicMeasure> measure;
    std::optional<AnalyticFn> function;
    std::optional<std::size_t> degree;
    std::optional<std::pair<std::size_t, std::size_t>> degree_range;
    std::optional<std::size_t> count;
    double tol_closed_vs_oracle = 1e-8;
    std::uint64_t seed = 0;
    std::size_t trials = 500;
    std::size_t s_max = 4;
    std::size_t n_max = 15;
    std::optional<Format> format;
};

/// Parses a JSON config. A projection document is itself a valid config:
/// when "function" is absent, "monomial_coefficients" is read as the
/// polynomial.
RunConfig parse_config(std::string_view text);

Format parse_format(std::string_view name);

struct CommandOutput {
    int exit_code = kOk;
    std::string document;
    std::string diagnostic;
};

CommandOutput cmd_project(const RunConfig& config);
CommandOutput cmd_distance(const RunConfig& config);
CommandOutput cmd_basis(const RunConfig& config);
CommandOutput cmd_converge(const RunConfig& config);
CommandOutput cmd_verify(const RunConfig& config);

/// Dispatch by subcommand name; library errors are mapped to exit codes.
CommandOutput run_command(std::string_view name, const RunConfig& config);

std::string render_projection(const ProjectionResult& result, const AtomicMeasure& mu);
std::string render_report(const ValidationReport& report, std::uint64_t seed, std::size_t s_max,
                          std::size_t n_max);

}  // namespace dmu::cli
