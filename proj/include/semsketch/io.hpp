#pragma once

#include <filesystem>
#include <istream>
#include <memory>
#include <string>
#include <string_view>

namespace semsketch {

// Opens a file for reading; a ".gz" extension selects transparent gzip
// decompression. Throws E_IO when the file cannot be opened.
std::unique_ptr<std::istream> open_input(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temporary and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace semsketch
