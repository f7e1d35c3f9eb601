#pragma once

// Command-line surface: each command builds a RunReport that renders as JSON,
// CSV or text. Exit codes: 0 ok, 1 violation, 2 usage error.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "stacksort/descent_counting.hpp"
#include "stacksort/permutation.hpp"
#include "stacksort/sturm.hpp"

namespace stacksort::cli {

using Json = nlohmann::ordered_json;

enum class Status { ok, violation, usage_error };
enum class Format { json, csv, text };

std::string to_string(Status s);
int exit_code(Status s);

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RunReport {
    std::string command;
    Json parameters = Json::object();
    Json results = Json::array();
    Status status = Status::ok;
    /// Human-readable rendering used by --format text.
    std::vector<std::string> text;

    /// Marks the report as a violation unless it is already a usage error.
    void fail() {
        if (status == Status::ok) status = Status::violation;
    }
};

struct GlobalOptions {
    Format format = Format::text;
    /// 0 means available parallelism.
    unsigned jobs = 0;
    EnumerationLimit limit = EnumerationLimit::from_environment();
    /// True when --max-n was given on the command line.
    bool max_n_explicit = false;

    EnumerationOptions enumeration() const { return {limit, jobs}; }
};

/// Cap used by the conjecture scan unless --max-n is given.
inline constexpr std::size_t kConjectureDefaultMaxN = 9;

// Serialization helpers.
Json poly_json(const RationalPoly& p);
Json certificate_json(const RootCertificate& c);
Json to_json(const RunReport& r);
std::string to_csv(const RunReport& r);
std::string to_text(const RunReport& r);
std::string render(const RunReport& r, Format f);

// Argument parsing helpers; all throw UsageError.
/// "7", "1..20", "1,3,5" or a mix such as "1..3,8".
std::vector<unsigned> parse_range(std::string_view text);
/// Comma-separated rationals such as "1/2,1,7/3".
std::vector<BigRational> parse_rational_list(std::string_view text);
Format parse_format(std::string_view text);

enum class TableMethod { brute_force, closed_form, both };
TableMethod parse_table_method(std::string_view text);

RunReport cmd_sort(const Word& word, unsigned times);
RunReport cmd_table(unsigned n, unsigned t, TableMethod method, const GlobalOptions& opts);
/// target: narayana, w2, pipeline, interlacing-narayana.
RunReport cmd_certify(std::string_view target, const std::vector<unsigned>& ns, const GlobalOptions& opts);
/// which: lemma2 (uses rs), post-lemma, jacobi-eq2 (uses alphas x betas), narayana-jacobi.
RunReport cmd_identities(std::string_view which, const std::vector<unsigned>& ns,
                         const std::vector<BigRational>& rs, const std::vector<BigRational>& alphas,
                         const std::vector<BigRational>& betas, const GlobalOptions& opts);
RunReport cmd_conjecture(unsigned n_max, const GlobalOptions& opts);

/// Parses argv, runs the command, writes the rendered report to out and
/// diagnostics to err. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stacksort::cli
