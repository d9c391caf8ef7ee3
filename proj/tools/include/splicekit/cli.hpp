#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace splicekit::cli {

/// Fields of one witness, keyed by name. Values are exact: integers or
/// reduced "a/b" strings, never floating point.
using Witness = std::map<std::string, std::string>;

struct Report {
    std::string command;
    std::string verdict;
    std::vector<Witness> witnesses;
    std::map<std::string, std::string> numbers;
    std::optional<std::string> document;  // file payload (plumb2splice, gen) or usage text
};

enum class Format { text, json };

struct RunResult {
    int exit_code = 0;  // 0 affirmative, 1 negative verdict, 2 invalid input or usage
    Report report;
    Format format = Format::text;
};

/// argv[0] is the program name. A file argument of "-" reads from `in`.
RunResult run(const std::vector<std::string>& argv, std::istream& in);

std::string render(const Report& report, Format format);

}  // namespace splicekit::cli
