#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vprcomp/metrics.hpp"
#include "vprcomp/outcomes.hpp"

namespace vprcomp {

enum class RankCriterion { median, upper, lower };

constexpr const char* to_string(RankCriterion c) {
  switch (c) {
    case RankCriterion::median: return "median";
    case RankCriterion::upper: return "upper";
    case RankCriterion::lower: return "lower";
  }
  return "median";
}

std::optional<RankCriterion> parse_criterion(std::string_view name);

double criterion_value(const BoundsSummary& b, RankCriterion c);

struct RankedPartner {
  std::string secondary;
  BoundsSummary summary;
};

// Candidate partners for one primary, best first. Sorted non-increasing by
// the chosen criterion; ties break by ascending secondary name.
struct PartnerRanking {
  std::string primary;
  RankCriterion criterion = RankCriterion::median;
  std::vector<RankedPartner> ranked;
};

// Ranks every technique that co-occurs with the primary and has at least
// one defined score. Throws Error(unknown_technique) when the primary
// appears in no dataset and Error(no_partners) when nothing is rankable.
PartnerRanking rank_partners(const DatasetCollection& c, std::string_view primary,
                             RankCriterion criterion = RankCriterion::median);

// Exact half-up rounding of 100 * covered / total to one decimal place,
// returned in tenths of a percent (0..1000). Pure integer arithmetic.
std::uint64_t percent_tenths(std::uint64_t covered, std::uint64_t total);

struct MapeCell {
  bool present = false;
  std::uint64_t tenths = 0;  // percentage in tenths, e.g. 781 renders "78.1"
  bool column_max = false;

  friend bool operator==(const MapeCell&, const MapeCell&) = default;
};

struct MapeRow {
  std::string tech_a;  // pair in ascending name order
  std::string tech_b;
  std::vector<MapeCell> cells;  // one per column
};

// Combination grid: one row per unordered technique pair (C(k,2) rows,
// lexicographic by pair), one column per dataset in collection order.
// Cells are absent where the pair does not co-occur; per-column maxima are
// flagged, ties included.
struct MapeTable {
  std::vector<std::string> columns;
  std::vector<MapeRow> rows;
};

MapeTable mape_table(const DatasetCollection& c);

}  // namespace vprcomp
