#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ttlab::cli {

/// Exit statuses of run().
enum ExitStatus : int
{
    kSuccess = 0,
    kDomainError = 1,
    kUsageError = 2,
};

/// Environment variable naming the default cache directory.
inline constexpr const char * kCacheDirEnv = "TTLAB_CACHE_DIR";

/// Executes one command line (without the program name), writing the report
/// to `out` and diagnostics to `err`. Returns an ExitStatus.
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace ttlab::cli
