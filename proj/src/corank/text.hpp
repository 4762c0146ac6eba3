#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace corank {

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

// Strict whole-string parses; nullopt on any trailing garbage.
std::optional<double> parse_double(std::string_view s);
std::optional<std::int64_t> parse_int(std::string_view s);

}  // namespace corank
