#include "twp/tightpoly/store.hpp"

#include <zlib.h>

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "json.hpp"
#include "twp/errors.hpp"
#include "twp/tightpoly/poly.hpp"

namespace twp {

namespace {

unsigned long checksum(const std::string& body) {
  return crc32(crc32(0L, Z_NULL, 0), reinterpret_cast<const Bytef*>(body.data()),
               static_cast<uInt>(body.size()));
}

std::atomic<unsigned> temp_counter{0};

}  // namespace

std::string cache_header(const std::string& kind_and_fields) {
  return std::string(kCacheMagic) + " " + kCacheVersion + " " + kind_and_fields;
}

void write_cache_file(const std::filesystem::path& file, const std::string& header,
                      const std::string& body) {
  std::error_code ec;
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path(), ec);
  if (ec) throw CacheError("cannot create " + file.parent_path().string() + ": " + ec.message());
  const auto tmp = file.string() + ".tmp." + std::to_string(::getpid()) + "." +
                   std::to_string(temp_counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp);
    char line[64];
    std::snprintf(line, sizeof line, "crc32 %08lx bytes %zu", checksum(body), body.size());
    out << header << '\n' << line << '\n' << body;
    if (!out) throw CacheError("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw CacheError("cannot publish " + file.string() + ": " + ec.message());
  }
}

std::optional<std::string> read_cache_file(const std::filesystem::path& file,
                                           const std::string& expected_header) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    if (!std::filesystem::exists(file)) return std::nullopt;
    throw CacheError("cannot read " + file.string());
  }
  std::string header;
  std::string sum_line;
  if (!std::getline(in, header) || !std::getline(in, sum_line)) {
    throw CacheError(file.string() + ": truncated header");
  }
  std::istringstream hs(header);
  std::string magic;
  std::string version;
  hs >> magic >> version;
  if (magic != kCacheMagic) throw CacheError(file.string() + ": not a cache file");
  if (version != kCacheVersion) {
    throw CacheError(file.string() + ": cache version " + version + ", expected " +
                     kCacheVersion);
  }
  if (header != expected_header) {
    throw CacheError(file.string() + ": header '" + header + "', expected '" +
                     expected_header + "'");
  }
  unsigned long expected_sum = 0;
  std::size_t expected_bytes = 0;
  if (std::sscanf(sum_line.c_str(), "crc32 %lx bytes %zu", &expected_sum, &expected_bytes) != 2) {
    throw CacheError(file.string() + ": malformed checksum line");
  }
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (body.size() != expected_bytes) {
    throw CacheError(file.string() + ": checksum error (body has " +
                     std::to_string(body.size()) + " bytes, expected " +
                     std::to_string(expected_bytes) + ")");
  }
  if (checksum(body) != expected_sum) throw CacheError(file.string() + ": checksum error");
  return body;
}

std::filesystem::path cell_path(const std::filesystem::path& dir, int g, int n) {
  return dir / "poly" / ("g" + std::to_string(g) + "_n" + std::to_string(n) + ".twp");
}

namespace {

std::string poly_header(int g, int n) {
  return cache_header("poly " + std::to_string(g) + " " + std::to_string(n) + " " +
                      std::to_string(3 * g - 3 + n));
}

}  // namespace

void store_cell(const std::filesystem::path& dir, const PolyCell& cell) {
  write_cache_file(cell_path(dir, cell.genus, cell.boundaries),
                   poly_header(cell.genus, cell.boundaries), cell.poly.to_json().dump());
}

std::optional<PolyCell> load_cell(const std::filesystem::path& dir, int g, int n) {
  const auto path = cell_path(dir, g, n);
  const auto body = read_cache_file(path, poly_header(g, n));
  if (!body) return std::nullopt;
  try {
    const int d = 3 * g - 3 + n;
    return PolyCell{g, n, TightPoly::from_json(n, d, nlohmann::json::parse(*body))};
  } catch (const nlohmann::json::exception& e) {
    throw CacheError(path.string() + ": " + e.what());
  } catch (const UserError& e) {
    throw CacheError(path.string() + ": " + e.what());
  }
}

}  // namespace twp
