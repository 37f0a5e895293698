#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "wordalg/word.hpp"

namespace wordalg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

enum class OutputFormat { Csv, Json, Pbm };

/// Runs one command line (without the program name). Output goes to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads a word of the given width. Accepted forms: "0b1010", a string of
/// exactly `width` binary digits, or a decimal integer below 2^width.
Word parse_word(std::string_view token, int width);

}  // namespace wordalg::cli
