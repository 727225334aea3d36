#include "csv_util.hpp"

#include "vprcomp/error.hpp"

namespace vprcomp::detail {

std::vector<CsvRecord> parse_csv(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::vector<CsvRecord> records;
  CsvRecord rec;
  std::string field;
  std::size_t line = 1;
  bool in_quotes = false;
  bool field_started = false;   // current field has consumed characters
  bool record_started = false;  // current record has consumed a field break or data

  auto end_field = [&] {
    rec.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(rec));
    rec = {};
    rec.line = line;
    record_started = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (in_quotes) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (ch == '\n') ++line;
        field += ch;
      }
      continue;
    }
    switch (ch) {
      case '"':
        if (field_started) {
          throw Error(Errc::parse_error,
                      "line " + std::to_string(line) + ": quote inside unquoted field");
        }
        in_quotes = true;
        field_started = true;
        record_started = true;
        break;
      case ',':
        end_field();
        record_started = true;
        break;
      case '\r':
        break;
      case '\n':
        ++line;
        if (record_started || field_started) {
          end_record();
        } else {
          rec.line = line;  // blank line, skip
        }
        break;
      default:
        field += ch;
        field_started = true;
        record_started = true;
    }
  }
  if (in_quotes) {
    throw Error(Errc::parse_error, "unterminated quoted field at end of input");
  }
  if (record_started || field_started) end_record();
  return records;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out;
  out.reserve(field.size() + 2);
  out += '"';
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

}  // namespace vprcomp::detail
