#ifndef CORESPECTRA_CLI_HPP
#define CORESPECTRA_CLI_HPP

namespace corespectra {

// Full command-line entry point: parses argv, runs the requested subcommand,
// writes the report to stdout and diagnostics to stderr. Returns the process
// exit code: 0 on success (including "no k-core"), 2 on input/parse errors,
// 3 on internal contract violations.
int cli_main(int argc, const char* const* argv);

}  // namespace corespectra

#endif
