#pragma once

// A single CLI invocation: validated inputs, the pipeline it runs, and the
// JSON/text report.

#include "staralg/serialize.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace staralg {

enum class Command { Star, Quantize, Matrix, Structure, Verify, Explore };
enum class Format { Json, Text };

std::string to_string(Command c);

/// Invalid job input; reported with exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct JobSpec {
    Command command = Command::Verify;
    int m = 1;
    std::optional<int> n;
    /// Generator expressions of the base ideal.
    std::vector<std::string> ideal;
    std::string f;
    std::string g;
    std::optional<int> degree;
    int slack = 2;
    std::optional<std::string> lambda;
    Format format = Format::Json;
    std::uint64_t seed = 1;
    /// Cases per randomized property in `verify`.
    int checks = 100;
    int coeff_bound = 9;
    int max_degree = 6;
    /// Report destination; empty for the output stream.
    std::string out;
};

/// Degree cap from STARALG_MAX_DEGREE, 12 when unset.
int max_truncation_degree();

/// Throws UsageError when required fields are missing or out of range.
void validate(const JobSpec& job);

/// Runs the pipeline and returns the report
/// {command, convention, inputs, results, checks}. Throws UsageError on
/// invalid input, including parse errors.
Json build_report(const JobSpec& job);

/// Plain-text rendering of a report.
std::string render_text(const Json& report);

/// Validates, runs and writes the report. Returns 0 when every check passes,
/// 1 when one fails, 2 on invalid input.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

} // namespace staralg
