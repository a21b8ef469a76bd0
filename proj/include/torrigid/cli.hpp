#pragma once

// File formats, reports and command dispatch for the torrigid executable.

#include "torrigid/t1.hpp"
#include "torrigid/toric.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace torrigid::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
    Success = 0,
    InputFailure = 1,
    Unsupported = 2,
    NoCertificate = 3,
    OracleMismatch = 4,
};

// --- input files --------------------------------------------------------------

/// Parse a fan file: { "rays": [[...]], "max_cones": [[...]], "name": "..." }.
/// Errors name the line (for syntax errors) or the offending field.
toric::RawFan parse_fan(const std::string& text, const std::string& source = "<input>");

/// Lattice polygon file: { "polygon": [[x, y], ...] }. Empty when the
/// document has no "polygon" key.
std::optional<std::vector<IntVector>> parse_polygon(const std::string& text, const std::string& source = "<input>");

/// Polynomial file: { "terms": [ { "coeff": "p/q", "exp": [...] }, ... ] }.
t1::CoxPolynomial parse_polynomial(const std::string& text, const std::string& source = "<input>");

std::string read_file(const std::string& path);

/// FNV-1a 64-bit hash as 16 hex digits.
std::string fnv1a64(const std::string& bytes);

// --- reports --------------------------------------------------------------------

struct HypothesisRow {
    std::string name;
    std::string status;
    std::string detail;
    friend bool operator==(const HypothesisRow&, const HypothesisRow&) = default;
};

struct ContributionRow {
    std::string part;
    std::vector<long> degree;
    std::size_t dimension = 0;
    friend bool operator==(const ContributionRow&, const ContributionRow&) = default;
};

struct Report {
    std::string command;      ///< echo of the arguments
    std::string input_digest; ///< hash of the input bytes and arguments
    Json results = Json::object();
    std::vector<HypothesisRow> hypotheses;
    std::vector<ContributionRow> contributions;
    std::string completeness; ///< "guaranteed", "bounded" or empty
    std::vector<std::string> warnings;
    int exit_code = Success;

    friend bool operator==(const Report&, const Report&) = default;
};

Json to_json(const Report& r);
Report report_from_json(const Json& j);
std::string to_text(const Report& r);

// --- commands -------------------------------------------------------------------

/// Run the command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace torrigid::cli
