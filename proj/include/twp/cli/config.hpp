#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "twp/ring/real.hpp"
#include "twp/tightpoly/poly.hpp"

namespace twp::cli {

enum class Format { json, csv, text };

Format parse_format(const std::string& name);
std::string format_name(Format f);

struct RunConfig {
  std::optional<std::filesystem::path> cache_dir;
  long precision = kDefaultPrecision;
  Format format = Format::text;
  std::uint64_t seed = 1;
  std::size_t budget = kDefaultMonomialBudget;

  // precision >= 53, budget >= 1e4
  void validate() const;
  // Points the shared polynomial cache at cache_dir with this budget.
  void apply() const;
};

// cache_dir from TWP_CACHE_DIR when set.
RunConfig default_config();

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// Scalar fields first, then an optional table.
struct Report {
  nlohmann::ordered_json fields = nlohmann::ordered_json::object();
  std::optional<Table> table;
};

void emit(const Report& report, Format format, std::ostream& out);

// Fixed-width decimal forms so reruns print byte-identical output.
std::string decimal(const Real& x, int digits = 17);
std::string decimal(double x, int digits = 17);
// Significant digits carried by a precision in bits.
int digits_for(long precision);

}  // namespace twp::cli
