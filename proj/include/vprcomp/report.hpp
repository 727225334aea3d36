#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vprcomp/outcomes.hpp"
#include "vprcomp/ranking.hpp"

namespace vprcomp {

enum class ReportFormat { csv, json, markdown };

constexpr const char* to_string(ReportFormat f) {
  switch (f) {
    case ReportFormat::csv: return "csv";
    case ReportFormat::json: return "json";
    case ReportFormat::markdown: return "markdown";
  }
  return "csv";
}

std::optional<ReportFormat> parse_report_format(std::string_view name);

// CSV surfaces behind the CLI subcommands. An empty filter means "all
// techniques"; a non-empty filter must name a technique present somewhere
// in the collection. Output is deterministic: rows iterate datasets in
// collection order and technique pairs in name order.
std::string render_contingency_csv(const DatasetCollection& c, std::string_view primary = {},
                                   std::string_view secondary = {});
std::string render_complement_csv(const DatasetCollection& c, std::string_view primary = {},
                                  std::string_view secondary = {});
std::string render_bounds_csv(const DatasetCollection& c, std::string_view primary = {},
                              std::string_view secondary = {});

// Empty techniques: every unordered pair. Two or more names: that one
// combination, one row per dataset where all of them ran.
std::string render_mape_csv(const DatasetCollection& c,
                            std::span<const std::string> techniques = {});

std::string render_rank_csv(const DatasetCollection& c, RankCriterion criterion,
                            std::string_view primary = {});

// Writes the four report surfaces (complementarity long table, per-primary
// complementarity chart data, per-primary bounds chart data ordered by the
// ranking criterion, and the combination grid) in each requested format.
// Runs on identical input produce byte-identical trees. Returns the
// written paths in emission order.
std::vector<std::filesystem::path> emit_report(const DatasetCollection& c,
                                               const std::filesystem::path& out_dir,
                                               std::span<const ReportFormat> formats,
                                               RankCriterion criterion = RankCriterion::median);

}  // namespace vprcomp
