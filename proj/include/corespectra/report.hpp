#ifndef CORESPECTRA_REPORT_HPP
#define CORESPECTRA_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "corespectra/graph.hpp"

namespace corespectra {

inline constexpr const char* kToolName = "corespectra";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

// One CLI invocation, fully resolved. Identical configs on identical inputs
// produce byte-identical JSON reports.
struct RunConfig {
    std::string subcommand;  // core | spectral | centrality | cycles | compare | self-check
    std::string input;       // file path or bundled dataset name
    FileFormat format = FileFormat::autodetect;
    std::string out = "table";  // json | csv | table

    int k = 1;

    // spectral options
    double tol = 1e-10;
    int max_iters = 10000;
    std::string norm = "l2";            // l1 | l2 | linf
    std::string mode = "per-component";  // per-component | naive
    double support_threshold = 1e-12;

    // cycles
    int max_len = 5;

    // centrality / compare
    std::vector<std::string> measures;  // subset of dc, cc, ec, kec, c3, c4, c5

    // self-check
    std::uint64_t seed = 20240817;
    int trials = 50;
};

struct RunOutcome {
    nlohmann::ordered_json report;  // full JSON report, always built
    std::string rendered;           // what goes to stdout per cfg.out
    int exit_code = 0;
};

// Dispatches to the analysis modules and assembles the report. Throws
// parse_error / format_error / resource_error on bad input and
// contract_error on misuse; the CLI maps those to exit codes 2 and 3.
RunOutcome run(const RunConfig& cfg);

}  // namespace corespectra

#endif
