#pragma once

// One command-line job: parse the input, run the analysis, render the document.

#include <cstdint>
#include <string>

namespace hypersect {

const char* tool_version();

/// Process exit statuses.
enum ExitStatus : int { exit_ok = 0, exit_input_error = 1, exit_failure = 2, exit_disagreement = 3 };

struct JobSpec {
    std::string command;        ///< analyze, check, find-pencil, synthesize or slice
    std::string input;          ///< expression, or a path when input_is_file
    bool input_is_file = false; ///< always true for synthesize
    std::string vars;           ///< empty: x,y,z (x,y,z,w for slice)
    std::uint64_t seed = 0;
    int budget = 6;             ///< pencil degree budget for check and find-pencil
    int rounds = 3;
    int tries = 4;
    int samples = 2;
    bool verify = false;        ///< synthesize: re-check the witness
    std::string lambda;         ///< slice: slicing variable; empty means the last one
    std::string values;         ///< slice: comma-separated rationals
    std::string plane;          ///< slice: candidate hyperplane; empty means the default
    int param_dim = 0;          ///< slice: base declared dimension
    std::string output;         ///< path; empty means stdout
};

struct JobResult {
    int status = exit_ok;
    std::string document;  ///< report (or family file for slice); a bug-report dump for status 3
    std::string error;     ///< one-line message for status 1
};

/// Never throws for bad input; failures are encoded in the status.
JobResult run(const JobSpec& job);

}  // namespace hypersect
