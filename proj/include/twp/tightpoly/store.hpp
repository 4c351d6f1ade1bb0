#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace twp {

inline constexpr const char* kCacheMagic = "TWPCACHE";
inline constexpr const char* kCacheVersion = "v1";

// A cache file is three parts: the header line "TWPCACHE v1 <kind> ...", a
// line "crc32 <hex> bytes <n>" covering the body, then the body. Writes go
// to a temporary sibling and are published by rename.
void write_cache_file(const std::filesystem::path& file, const std::string& header,
                      const std::string& body);

// std::nullopt when the file is absent. CacheError on a version or header
// mismatch, a short body, or a checksum mismatch.
std::optional<std::string> read_cache_file(const std::filesystem::path& file,
                                           const std::string& expected_header);

// "<kind> <fields>" prefixed with magic and version.
std::string cache_header(const std::string& kind_and_fields);

}  // namespace twp
