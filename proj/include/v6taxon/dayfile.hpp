#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "v6taxon/address.hpp"

namespace v6taxon {

// Day index = days since 1970-01-01.
std::optional<int> parse_day(std::string_view yyyymmdd);
std::string format_day(int day_index);  // "YYYYMMDD"

// Inclusive "YYYYMMDD" or "YYYYMMDD-YYYYMMDD".
std::optional<std::pair<int, int>> parse_day_range(std::string_view spec);

// Day files: <dir>/YYYYMMDD.addrset, concatenated 16-byte big-endian
// address values, strictly ascending, no duplicates, no header.
std::filesystem::path dayfile_path(const std::filesystem::path& dir, int day_index);

void write_dayfile(const std::filesystem::path& path,
                   const std::vector<Address>& sorted_unique);
// Throws std::runtime_error on a missing file or malformed contents.
std::vector<Address> read_dayfile(const std::filesystem::path& path);

}  // namespace v6taxon
