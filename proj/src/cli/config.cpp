#include "twp/cli/config.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "twp/errors.hpp"

namespace twp::cli {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw UserError("unknown format '" + name + "' (json, csv, text)");
}

std::string format_name(Format f) {
  switch (f) {
    case Format::json:
      return "json";
    case Format::csv:
      return "csv";
    case Format::text:
      return "text";
  }
  return "text";
}

void RunConfig::validate() const {
  if (precision < 53) throw UserError("precision must be at least 53 bits");
  if (budget < 10'000) throw UserError("budget must be at least 10000 monomials");
}

void RunConfig::apply() const {
  auto& cache = default_poly_cache();
  cache.set_budget(budget);
  cache.set_directory(cache_dir);
}

RunConfig default_config() {
  RunConfig cfg;
  if (const char* dir = std::getenv("TWP_CACHE_DIR"); dir != nullptr && *dir != '\0') {
    cfg.cache_dir = std::filesystem::path(dir);
  }
  return cfg;
}

std::string decimal(const Real& x, int digits) { return x.to_string(digits); }

std::string decimal(double x, int digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*e", digits - 1, x);
  return buffer;
}

int digits_for(long precision) {
  return static_cast<int>(std::floor(static_cast<double>(precision) * 0.30102999566398120));
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scalar_text(const nlohmann::ordered_json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

}  // namespace

void emit(const Report& report, Format format, std::ostream& out) {
  if (format == Format::json) {
    nlohmann::ordered_json j = report.fields;
    if (report.table) {
      auto rows = nlohmann::ordered_json::array();
      for (const auto& row : report.table->rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) obj[report.table->columns[c]] = row[c];
        rows.push_back(std::move(obj));
      }
      j["rows"] = std::move(rows);
    }
    out << j.dump(2) << "\n";
    return;
  }
  if (format == Format::csv) {
    if (report.table) {
      const auto& t = *report.table;
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        out << (c ? "," : "") << csv_cell(t.columns[c]);
      }
      out << "\n";
      for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
        out << "\n";
      }
    } else {
      out << "key,value\n";
      for (const auto& [k, v] : report.fields.items()) {
        out << csv_cell(k) << "," << csv_cell(scalar_text(v)) << "\n";
      }
    }
    return;
  }
  for (const auto& [k, v] : report.fields.items()) out << k << ": " << scalar_text(v) << "\n";
  if (report.table) {
    const auto& t = *report.table;
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    const auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        out << (c ? "  " : "") << cells[c];
        if (c + 1 < cells.size()) out << std::string(width[c] - cells[c].size(), ' ');
      }
      out << "\n";
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
  }
}

}  // namespace twp::cli
