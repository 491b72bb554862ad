#pragma once

#include <string>
#include <string_view>

namespace cutwave {

std::string read_file(const std::string& path);

// Writes to a sibling temp file and renames it over `path`.
void write_file_atomic(const std::string& path, std::string_view content);

// printf-style "%.12g".
std::string fmt12(double v);
// Shortest text that parses back to the same binary64 ("%.17g").
std::string fmt17(double v);

}  // namespace cutwave
