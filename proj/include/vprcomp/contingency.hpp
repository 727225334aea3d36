#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "vprcomp/outcomes.hpp"

namespace vprcomp {

// Joint per-query outcome counts for an ordered technique pair on one
// dataset. Every aligned query falls into exactly one of the four cells,
// so both_correct + only_primary + only_secondary + both_incorrect = total.
struct ContingencyTable {
  std::string dataset;
  std::string primary;
  std::string secondary;
  std::uint64_t both_correct = 0;    // X
  std::uint64_t only_primary = 0;    // W: primary correct, secondary not
  std::uint64_t only_secondary = 0;  // T: secondary correct, primary not
  std::uint64_t both_incorrect = 0;  // Z
  std::uint64_t total = 0;           // Y

  friend bool operator==(const ContingencyTable&, const ContingencyTable&) = default;
};

// Classifies every query shared by the two runs. Alignment is by query_id;
// throws Error(unknown_technique) for a missing run, Error(same_pair) when
// primary == secondary, and Error(ragged_matrix) when the runs do not
// cover the same query_id set.
ContingencyTable build_contingency(const OutcomeMatrix& m, std::string_view primary,
                                   std::string_view secondary);

// Swaps the pair's roles; only_primary and only_secondary trade places.
ContingencyTable transpose(const ContingencyTable& t);

// Chi-squared critical value, 1 degree of freedom, alpha = 0.05.
inline constexpr double kChi2Critical05 = 3.841;

// Continuity-corrected chi-squared statistic over the discordant counts:
// (|T - W| - 1)^2 / (T + W). A table with no discordant queries is flagged
// degenerate (statistic 0, never significant) rather than rejected.
struct McNemarResult {
  double statistic = 0.0;
  std::uint64_t discordant_total = 0;  // T + W
  bool significant_at_05 = false;
  bool degenerate = false;
};

McNemarResult mcnemar(const ContingencyTable& t);

}  // namespace vprcomp
