#include "vprcomp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "vprcomp/error.hpp"

namespace vprcomp {

ComplementarityScore complementarity(const ContingencyTable& t) {
  ComplementarityScore s;
  s.dataset = t.dataset;
  s.primary = t.primary;
  s.secondary = t.secondary;
  s.rescued = t.only_secondary;
  s.failures_of_primary = t.only_secondary + t.both_incorrect;
  s.defined = s.failures_of_primary > 0;
  if (s.defined) {
    s.value = static_cast<double>(s.rescued) / static_cast<double>(s.failures_of_primary);
  }
  return s;
}

ScoreSet collect_scores(const DatasetCollection& c, std::string_view primary,
                        std::string_view secondary) {
  if (primary == secondary) {
    throw Error(Errc::same_pair, "primary and secondary are both '" + std::string(primary) + "'");
  }
  ScoreSet s{std::string(primary), std::string(secondary), {}};
  for (const auto& m : c.matrices) {
    if (m.find_run(primary) == nullptr || m.find_run(secondary) == nullptr) continue;
    ComplementarityScore score = complementarity(build_contingency(m, primary, secondary));
    if (score.defined) s.scores.push_back(std::move(score));
  }
  return s;
}

ScoreSet score_set(const DatasetCollection& c, std::string_view primary,
                   std::string_view secondary) {
  ScoreSet s = collect_scores(c, primary, secondary);
  if (s.scores.empty()) {
    throw Error(Errc::no_defined_scores,
                "pair ('" + std::string(primary) + "', '" + std::string(secondary) +
                    "') has no defined complementarity score in any dataset");
  }
  return s;
}

BoundsSummary bounds(const ScoreSet& s) {
  if (s.scores.empty()) {
    throw Error(Errc::empty_score_set,
                "pair ('" + s.primary + "', '" + s.secondary + "') has an empty score set");
  }
  std::vector<double> values;
  values.reserve(s.scores.size());
  for (const auto& score : s.scores) values.push_back(score.value);
  std::sort(values.begin(), values.end());

  BoundsSummary b;
  b.primary = s.primary;
  b.secondary = s.secondary;
  b.lower = values.front();
  b.upper = values.back();
  const std::size_t n = values.size();
  b.median = (n % 2 == 1) ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
  b.n_datasets = n;
  return b;
}

MapeEstimate mape_pair(const ContingencyTable& t) {
  MapeEstimate e;
  e.dataset = t.dataset;
  e.techniques = {t.primary, t.secondary};
  e.covered = t.only_secondary + t.only_primary + t.both_correct;
  e.total = t.total;
  e.value = e.total > 0 ? static_cast<double>(e.covered) / static_cast<double>(e.total) : 0.0;
  return e;
}

MapeEstimate mape_k(const OutcomeMatrix& m, std::span<const std::string> techniques) {
  if (techniques.size() < 2) {
    throw Error(Errc::invalid_argument, "a combination needs at least 2 techniques");
  }
  {
    std::vector<std::string_view> names(techniques.begin(), techniques.end());
    std::sort(names.begin(), names.end());
    auto dup = std::adjacent_find(names.begin(), names.end());
    if (dup != names.end()) {
      throw Error(Errc::duplicate_technique,
                  "technique '" + std::string(*dup) + "' listed more than once");
    }
  }
  std::vector<const TechniqueRun*> runs;
  runs.reserve(techniques.size());
  for (const auto& name : techniques) {
    const TechniqueRun* run = m.find_run(name);
    if (run == nullptr) {
      throw Error(Errc::unknown_technique,
                  "technique '" + name + "' has no run on dataset '" + m.dataset + "'");
    }
    runs.push_back(run);
  }

  MapeEstimate e;
  e.dataset = m.dataset;
  e.techniques.assign(techniques.begin(), techniques.end());
  e.total = m.total_queries;

  // Zip when all runs share the first run's query_id order, else join by id.
  const TechniqueRun* first = runs.front();
  bool zipped = true;
  for (const TechniqueRun* run : runs) {
    if (run->outcomes.size() != first->outcomes.size()) {
      zipped = false;
      break;
    }
  }
  if (zipped) {
    for (std::size_t i = 0; i < first->outcomes.size() && zipped; ++i) {
      for (const TechniqueRun* run : runs) {
        if (run->outcomes[i].query_id != first->outcomes[i].query_id) {
          zipped = false;
          break;
        }
      }
    }
  }
  if (zipped) {
    for (std::size_t i = 0; i < first->outcomes.size(); ++i) {
      for (const TechniqueRun* run : runs) {
        if (run->outcomes[i].correct) {
          ++e.covered;
          break;
        }
      }
    }
  } else {
    std::unordered_map<std::string_view, bool> any_correct;
    any_correct.reserve(first->outcomes.size());
    for (const auto& q : first->outcomes) any_correct.emplace(q.query_id, false);
    for (const TechniqueRun* run : runs) {
      if (run->outcomes.size() != any_correct.size()) {
        throw Error(Errc::ragged_matrix,
                    "dataset '" + m.dataset + "': run of '" + run->technique +
                        "' covers a different query_id set");
      }
      for (const auto& q : run->outcomes) {
        auto it = any_correct.find(q.query_id);
        if (it == any_correct.end()) {
          throw Error(Errc::ragged_matrix,
                      "dataset '" + m.dataset + "': query_id '" + q.query_id +
                          "' not shared by all listed techniques");
        }
        if (q.correct) it->second = true;
      }
    }
    for (const auto& [id, correct] : any_correct) {
      if (correct) ++e.covered;
    }
  }

  e.value = e.total > 0 ? static_cast<double>(e.covered) / static_cast<double>(e.total) : 0.0;
  return e;
}

double mape_identity_check(const ContingencyTable& t) {
  ComplementarityScore cba = complementarity(t);
  if (!cba.defined) {
    throw Error(Errc::undefined_complementarity,
                "primary '" + t.primary + "' has no failures on dataset '" + t.dataset + "'");
  }
  const double perf_primary =
      static_cast<double>(t.only_primary + t.both_correct) / static_cast<double>(t.total);
  const double mape = mape_pair(t).value;
  return std::abs(mape - (perf_primary + cba.value * (1.0 - perf_primary)));
}

}  // namespace vprcomp
