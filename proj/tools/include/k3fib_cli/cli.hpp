#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace k3fib::cli {

using Json = nlohmann::ordered_json;

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 input error, 2 internal invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Leaf values of a payload keyed by path ("candidates[0].checks[1].id").
/// Empty containers appear as "[]" or "{}".
std::vector<std::pair<std::string, std::string>> flatten(const Json& payload);

/// Human rendering: a bare value for single-value payloads, otherwise one
/// "path: value" line per leaf, followed by one "errata: ..." line per flag.
std::string render_human(const Json& payload, const std::vector<std::string>& errata_flags);

}  // namespace k3fib::cli
