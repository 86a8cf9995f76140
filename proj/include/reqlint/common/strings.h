#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace reqlint {

// ASCII lowercase; bytes >= 0x80 pass through untouched.
std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
bool iequals(std::string_view a, std::string_view b);

// Case-insensitive substring test (ASCII folding).
bool icontains(std::string_view haystack, std::string_view needle);

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 14695981039346656037ULL);
std::string hex64(std::uint64_t value);

// Fixed-point rendering used by every report writer so outputs are stable.
std::string format_fixed(double value, int decimals = 4);

std::string read_file(const std::filesystem::path& path);

// Directory of bundled resources: $REQLINT_RESOURCE_DIR, else the build-time default.
std::filesystem::path resource_dir();
std::filesystem::path resource_path(std::string_view relative);

}  // namespace reqlint
