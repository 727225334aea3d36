#include "vprcomp/ranking.hpp"

#include <algorithm>
#include <set>

#include "vprcomp/contingency.hpp"
#include "vprcomp/error.hpp"

namespace vprcomp {

std::optional<RankCriterion> parse_criterion(std::string_view name) {
  if (name == "median") return RankCriterion::median;
  if (name == "upper") return RankCriterion::upper;
  if (name == "lower") return RankCriterion::lower;
  return std::nullopt;
}

double criterion_value(const BoundsSummary& b, RankCriterion c) {
  switch (c) {
    case RankCriterion::median: return b.median;
    case RankCriterion::upper: return b.upper;
    case RankCriterion::lower: return b.lower;
  }
  return b.median;
}

PartnerRanking rank_partners(const DatasetCollection& c, std::string_view primary,
                             RankCriterion criterion) {
  std::set<std::string> partners;
  bool primary_seen = false;
  for (const auto& m : c.matrices) {
    if (m.find_run(primary) == nullptr) continue;
    primary_seen = true;
    for (const auto& [name, run] : m.runs) {
      if (name != primary) partners.insert(name);
    }
  }
  if (!primary_seen) {
    throw Error(Errc::unknown_technique,
                "technique '" + std::string(primary) + "' appears in no dataset");
  }

  PartnerRanking r;
  r.primary = std::string(primary);
  r.criterion = criterion;
  for (const auto& partner : partners) {
    ScoreSet s = collect_scores(c, primary, partner);
    if (s.scores.empty()) continue;
    r.ranked.push_back({partner, bounds(s)});
  }
  if (r.ranked.empty()) {
    throw Error(Errc::no_partners,
                "no technique with a defined complementarity score co-occurs with '" +
                    std::string(primary) + "'");
  }
  std::stable_sort(r.ranked.begin(), r.ranked.end(),
                   [criterion](const RankedPartner& a, const RankedPartner& b) {
                     const double va = criterion_value(a.summary, criterion);
                     const double vb = criterion_value(b.summary, criterion);
                     if (va != vb) return va > vb;
                     return a.secondary < b.secondary;
                   });
  return r;
}

std::uint64_t percent_tenths(std::uint64_t covered, std::uint64_t total) {
  if (total == 0) return 0;
  // floor(1000 * covered / total + 1/2) without leaving the integers
  return (2000 * covered + total) / (2 * total);
}

MapeTable mape_table(const DatasetCollection& c) {
  MapeTable table;
  table.columns = c.dataset_names();
  const std::vector<std::string> techs = c.technique_names();

  for (std::size_t i = 0; i < techs.size(); ++i) {
    for (std::size_t j = i + 1; j < techs.size(); ++j) {
      MapeRow row{techs[i], techs[j], std::vector<MapeCell>(table.columns.size())};
      for (std::size_t d = 0; d < c.matrices.size(); ++d) {
        const OutcomeMatrix& m = c.matrices[d];
        if (m.find_run(techs[i]) == nullptr || m.find_run(techs[j]) == nullptr) continue;
        const MapeEstimate e = mape_pair(build_contingency(m, techs[i], techs[j]));
        row.cells[d].present = e.total > 0;
        row.cells[d].tenths = percent_tenths(e.covered, e.total);
      }
      table.rows.push_back(std::move(row));
    }
  }

  for (std::size_t d = 0; d < table.columns.size(); ++d) {
    std::uint64_t best = 0;
    bool any = false;
    for (const auto& row : table.rows) {
      if (row.cells[d].present && (!any || row.cells[d].tenths > best)) {
        best = row.cells[d].tenths;
        any = true;
      }
    }
    if (!any) continue;
    for (auto& row : table.rows) {
      if (row.cells[d].present && row.cells[d].tenths == best) row.cells[d].column_max = true;
    }
  }
  return table;
}

}  // namespace vprcomp
