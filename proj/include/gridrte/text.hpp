#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace gridrte {

/// Shortest decimal form that round-trips through a double. All delimited
/// outputs use this so files are byte-stable and downstream arithmetic on
/// re-parsed values is exact.
std::string format_double(double value);

/// Strict counterpart of format_double; throws ParseError on garbage.
double parse_double(std::string_view text, std::string_view context);
std::int64_t parse_int(std::string_view text, std::string_view context);

std::vector<std::string> split_csv_line(std::string_view line);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

/// FNV-1a over bytes; the stable 64-bit hash for key streams and
/// artifact fingerprints.
std::uint64_t fnv1a64(std::string_view bytes);

/// Hash rendered as 16 lowercase hex digits.
std::string to_hex64(std::uint64_t value);

}  // namespace gridrte
