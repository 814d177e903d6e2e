#pragma once

#include <string>
#include <vector>

namespace codesum {

struct ProcessResult {
    int exit_code = -1;
    std::string out;
    std::string err;
    int spawn_errno = 0;  // nonzero when the binary could not be started

    bool ok() const { return spawn_errno == 0 && exit_code == 0; }
};

// Runs argv[0] with the given arguments (PATH lookup, no shell) and captures
// stdout/stderr. A failure to start the process is reported through
// spawn_errno rather than an exception so callers can map it to their own
// error taxonomy.
ProcessResult run_process(const std::vector<std::string>& argv);

}  // namespace codesum
