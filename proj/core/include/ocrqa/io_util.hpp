#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace ocrqa {

std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temp file, then renames over the target.
void atomic_write_file(const std::filesystem::path& path, std::string_view content);

// Shortest round-trip decimal form (std::to_chars), locale independent.
std::string format_double(double v);

}  // namespace ocrqa
