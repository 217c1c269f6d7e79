#pragma once

#include <string>
#include <vector>

namespace semsketch::cli {

// Exit codes: 0 ok, 1 usage, 2 data error, 3 I/O.
enum ExitCode { kOk = 0, kUsage = 1, kData = 2, kIo = 3 };

// Runs `semsketch` with argv[0] excluded. Output goes to stdout/stderr.
int run(const std::vector<std::string>& args);

}  // namespace semsketch::cli
