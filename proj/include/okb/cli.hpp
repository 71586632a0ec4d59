#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace okb::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kRejected = 2,
    kComputational = 3,
};

struct RunConfig {
    std::string command;
    std::string case_name = "p2";
    std::optional<std::string> fixture;
    int c = 1;
    int max_level = 4;
    std::string kind = "powers";
    std::string out = "out";
    std::int64_t p = 101;
    std::int64_t a = 1;
    std::int64_t b = 1;
    int d = 3;
    int samples = 200;
    std::uint64_t seed = 1;
    bool verbose = false;
};

int cmd_compute(const RunConfig& cfg, std::ostream& out);
int cmd_certify(const RunConfig& cfg, std::ostream& out);
int cmd_verify_flag(const RunConfig& cfg, std::ostream& out);
int cmd_lemma_ec(const RunConfig& cfg, std::ostream& out);
int cmd_export_toric(const RunConfig& cfg, std::ostream& out);
int cmd_demo(const RunConfig& cfg, std::ostream& out);

/// Dispatches on cfg.command and maps library errors to exit codes:
/// InvalidArgument -> 1, any other library error -> 3. Messages go to err.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace okb::cli
