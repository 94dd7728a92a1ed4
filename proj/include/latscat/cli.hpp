#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "latscat/core.hpp"

namespace latscat::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kSingular = 2,
    kVerifyFailed = 3,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "v" or "lo:hi:step". Values are lo + k*step for k = 0, 1, ... while
/// value <= hi + step/2. Throws InvalidArgument on malformed input or step <= 0.
std::vector<double> parse_range(const std::string& text);

/// Comma separated positive integers.
std::vector<int> parse_int_list(const std::string& text);

/// Window document: {"lo": int, "hi": int, "entries": [{"i", "j", "re", "im"?}]}.
/// Unknown keys, duplicates and out-of-range indices are rejected.
InteractionWindow parse_window_json(const std::string& text);
InteractionWindow read_window_file(const std::string& path);
std::string window_to_json(const InteractionWindow& win);

/// SCATTER_THREADS value: nullopt when unset, throws InvalidArgument unless a
/// positive integer.
std::optional<unsigned> threads_from_env(const char* value);

/// Field names of `solve --format json`, in emission order.
const std::vector<std::string>& solve_json_fields();

}  // namespace latscat::cli
