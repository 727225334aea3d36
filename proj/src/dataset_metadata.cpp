#include "vprcomp/dataset_metadata.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "csv_util.hpp"
#include "vprcomp/error.hpp"

namespace vprcomp {

const std::vector<DatasetMeta>& vprbench_datasets() {
  static const std::vector<DatasetMeta> table = {
      {"GardensPoint", "University Campus", 200, 200, "Lateral", "Day-Night"},
      {"24/7 Query", "Outdoor", 375, 750, "6-DOF", "Day-Night"},
      {"ESSEX3IN1", "University Campus", 210, 210, "6-DOF", "Illumination"},
      {"SPEDTest", "Outdoor", 607, 607, "None", "Seasonal and Weather"},
      {"Cross-Seasons", "City-Like", 191, 191, "Lateral", "Dawn-Dusk"},
      {"Synthia", "City-like(Synthetic)", 947, 947, "Lateral", "Seasonal"},
      {"Nordland", "Train Journey", 1622, 1622, "None", "Seasonal"},
      {"Corridor", "Indoor", 111, 111, "Lateral", "None"},
      {"17-Places", "Indoor", 406, 406, "Lateral", "Day-Night"},
      {"Living-room", "Indoor", 32, 32, "Lateral", "Day-Night"},
  };
  return table;
}

namespace {

std::size_t parse_count(const std::string& field, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw Error(Errc::parse_error,
                "line " + std::to_string(line) + ": '" + field + "' is not a count");
  }
  return value;
}

}  // namespace

std::vector<DatasetMeta> load_dataset_metadata(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();

  auto records = detail::parse_csv(buf.str());
  static const std::vector<std::string> expected = {
      "name", "environment", "query_images", "ref_images",
      "viewpoint_variation", "conditional_variation"};
  if (records.empty() || records.front().fields != expected) {
    throw Error(Errc::parse_error,
                "metadata header must be exactly "
                "'name,environment,query_images,ref_images,viewpoint_variation,conditional_variation'");
  }
  std::vector<DatasetMeta> out;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != 6) {
      throw Error(Errc::parse_error, "line " + std::to_string(rec.line) + ": expected 6 fields");
    }
    out.push_back({rec.fields[0], rec.fields[1], parse_count(rec.fields[2], rec.line),
                   parse_count(rec.fields[3], rec.line), rec.fields[4], rec.fields[5]});
  }
  return out;
}

std::string normalize_dataset_name(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  for (unsigned char c : name) {
    if (std::isalnum(c)) out += static_cast<char>(std::tolower(c));
  }
  return out;
}

std::vector<Violation> cross_check_query_counts(const DatasetCollection& c,
                                                const std::vector<DatasetMeta>& metadata) {
  std::vector<Violation> out;
  for (const auto& m : c.matrices) {
    const std::string key = normalize_dataset_name(m.dataset);
    for (const auto& meta : metadata) {
      if (normalize_dataset_name(meta.name) != key) continue;
      if (m.total_queries != meta.query_images) {
        out.push_back({ViolationKind::query_count_mismatch, m.dataset, "",
                       "expected " + std::to_string(meta.query_images) +
                           " query outcomes per technique ('" + meta.name + "'), found " +
                           std::to_string(m.total_queries)});
      }
      break;
    }
  }
  return out;
}

}  // namespace vprcomp
