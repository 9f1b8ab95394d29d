#ifndef incdfs_cli_hpp
#define incdfs_cli_hpp

#include <iosfwd>

namespace incdfs::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kBadInput = 2,      // unreadable file, parse error or bad parameter
    kInvalidUpdate = 3,
    kStreamInvalid = 4, // a reported tree failed validation under --check
};

// Version of the metrics CSV layout, written in its first column.
inline constexpr int kMetricsVersion = 1;

// Entry point of the `incdfs` tool with injectable streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace incdfs::cli

#endif /* incdfs_cli_hpp */
