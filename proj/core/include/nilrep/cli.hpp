#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "nilrep/certify.hpp"

namespace nilrep {

/// Command-line usage problem; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parsed invocation: subcommand plus the module and run parameters.
struct RunConfig {
    std::string command;
    LieType type = LieType::A;
    int rank = 1;
    long l = 5;
    std::vector<long> lambda;
    Suite suite = Suite::All;
    long sample = 1000;
    std::uint64_t seed = 1;
    std::string backend = "exact";
    ReducedWord w0;
    std::string out_path;    // "-" or empty: stdout
    std::string basis_out;   // newline-delimited JSON basis dump
    std::string basis_in;    // reload + closure re-check instead of spanning
    int threads = 0;
    bool normalize_timings = false;
    BShiftBranch branch = BShiftBranch::Corrected;
    std::vector<long> a_override, b_override;            // full tables, per slot
    std::vector<std::tuple<int, int, long>> corrupt_b;   // test hook: (i, j, delta)
};

/// Parses argv (without the program name); throws UsageError on bad input.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes a parsed run. Exit codes: 0 all checks pass, 1 a check failed,
/// 2 usage error, 3 I/O or internal failure.
int run(const RunConfig& config);

/// Convenience wrapper for main().
int cli_main(int argc, const char* const* argv);

}  // namespace nilrep
