#pragma once

#include "hopfwb/io.hpp"
#include "hopfwb/pipelines.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hopfwb {

/// Exit codes of the command line tool.
enum ExitCode : int { ExitPass = 0, ExitFail = 1, ExitInapplicable = 2, ExitInputError = 3 };

struct RunOptions {
    ReportFormat format = ReportFormat::Text;
    std::size_t test_grid = 3;
    std::uint64_t seed = 1;
    bool reconstruct_dual = false;
};

const std::vector<std::string>& report_commands();

/// Runs a report command on a document. Unless the command is check-axioms,
/// the axioms are checked first and a failure stops the run.
CheckReport run_command(const std::string& command, const InputDocument& doc, const RunOptions& opts);

int exit_code(const CheckReport& r);

struct RunResult {
    int code = ExitPass;
    std::string output;
};

/// run_command rendered, with its exit code.
RunResult run(const std::string& command, const InputDocument& doc, const RunOptions& opts);

} // namespace hopfwb
