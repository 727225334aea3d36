#pragma once

// Minimal RFC-4180-style CSV reading/writing shared by the ingestion,
// metadata, and report paths. Quoted fields may contain commas, doubled
// quotes, and newlines; CRLF line endings are accepted.

#include <string>
#include <string_view>
#include <vector>

namespace vprcomp::detail {

struct CsvRecord {
  std::vector<std::string> fields;
  std::size_t line = 1;  // 1-based line the record starts on
};

std::vector<CsvRecord> parse_csv(std::string_view text);

// Quotes a field only when it needs quoting.
std::string csv_escape(std::string_view field);

}  // namespace vprcomp::detail
