#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace proapt {

// Minimal RFC-4180-ish CSV. Quoted fields may contain commas, doubled
// quotes, and newlines; each row remembers the 1-based line it started on.
struct CsvRow {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<CsvRow> rows;
};

CsvTable read_csv(const std::string& path);

// Writes one CSV line, quoting fields that need it.
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace proapt
