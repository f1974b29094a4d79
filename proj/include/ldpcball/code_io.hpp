#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ldpcball/linear_code.hpp"

namespace ldpcball {

/// "coset-code v1" text format:
///
///   n m w
///   <1-based support of v_1>
///   ...
///   <1-based support of v_m>
///
/// Throws ParseError naming the line, or the uncovered coordinates.
LinearCode parse_code(std::string_view text);
LinearCode read_code_file(const std::filesystem::path& path);

/// Canonical serialization: indices ascending, single spaces, trailing newline.
std::string format_code(const LinearCode& code);
void write_code_file(const std::filesystem::path& path, const LinearCode& code);

/// MacKay "alist" parity-check format. Each check row becomes a spanning
/// vector of the dual; w is the largest row weight.
LinearCode parse_alist(std::string_view text);
LinearCode read_alist_file(const std::filesystem::path& path);

}  // namespace ldpcball
