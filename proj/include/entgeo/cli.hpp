#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace entgeo::cli {

// Outcome of one invocation: exit code 0 on success, 1 on domain errors,
// 2 on usage errors.  output holds the machine-readable document on
// success, or {"schema": "1", "error": ...} on a domain error.
struct RunResult {
    int exit_code = 0;
    nlohmann::json output;
    std::string help_text;  // set when the parse ended in help or usage error
};

// Runs one subcommand from an argv-style list (program name excluded).
RunResult run_command(const std::vector<std::string>& args);

// Renders a result document; format is "json" or "table".
std::string render(const nlohmann::json& output, const std::string& format);

// Golden-table runner: the corpus file maps names to invocations and their
// expected documents; returns the number of mismatches.
int run_corpus(const std::string& path, std::ostream& log);

// Full command line entry point used by the binary.
int main_entry(int argc, char** argv);

}  // namespace entgeo::cli
