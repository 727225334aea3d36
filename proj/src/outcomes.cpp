#include "vprcomp/outcomes.hpp"

#include <algorithm>
#include <set>

#include "vprcomp/error.hpp"

namespace vprcomp {

std::size_t TechniqueRun::correct_count() const {
  return static_cast<std::size_t>(std::count_if(
      outcomes.begin(), outcomes.end(),
      [](const QueryOutcome& q) { return q.correct; }));
}

const TechniqueRun* OutcomeMatrix::find_run(std::string_view technique) const {
  auto it = runs.find(technique);
  return it == runs.end() ? nullptr : &it->second;
}

std::vector<std::string> OutcomeMatrix::technique_names() const {
  std::vector<std::string> names;
  names.reserve(runs.size());
  for (const auto& [name, run] : runs) names.push_back(name);
  return names;
}

const OutcomeMatrix* DatasetCollection::find_dataset(std::string_view name) const {
  for (const auto& m : matrices) {
    if (m.dataset == name) return &m;
  }
  return nullptr;
}

std::vector<std::string> DatasetCollection::dataset_names() const {
  std::vector<std::string> names;
  names.reserve(matrices.size());
  for (const auto& m : matrices) names.push_back(m.dataset);
  return names;
}

std::vector<std::string> DatasetCollection::technique_names() const {
  std::set<std::string> names;
  for (const auto& m : matrices) {
    for (const auto& [name, run] : m.runs) names.insert(name);
  }
  return {names.begin(), names.end()};
}

double technique_performance(const OutcomeMatrix& m, std::string_view technique) {
  const TechniqueRun* run = m.find_run(technique);
  if (run == nullptr) {
    throw Error(Errc::unknown_technique,
                "technique '" + std::string(technique) + "' has no run on dataset '" + m.dataset + "'");
  }
  if (m.total_queries == 0) {
    throw Error(Errc::invalid_argument, "dataset '" + m.dataset + "' has total_queries = 0");
  }
  return static_cast<double>(run->correct_count()) / static_cast<double>(m.total_queries);
}

std::string to_string(const Violation& v) {
  std::string s = "violation[";
  s += violation_name(v.kind);
  s += "] dataset='" + v.dataset + "'";
  if (!v.technique.empty()) s += " technique='" + v.technique + "'";
  s += ": " + v.detail;
  return s;
}

namespace {

std::vector<std::string_view> sorted_ids(const TechniqueRun& run) {
  std::vector<std::string_view> ids;
  ids.reserve(run.outcomes.size());
  for (const auto& q : run.outcomes) ids.push_back(q.query_id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

void validate_matrix(const OutcomeMatrix& m, std::vector<Violation>& out) {
  if (m.runs.size() < 2) {
    out.push_back({ViolationKind::too_few_techniques, m.dataset, "",
                   "pairwise analysis needs at least 2 techniques, found " +
                       std::to_string(m.runs.size())});
  }
  std::vector<std::string_view> reference_ids;
  std::string reference_technique;
  bool have_reference = false;
  for (const auto& [name, run] : m.runs) {
    if (run.outcomes.empty()) {
      out.push_back({ViolationKind::empty_run, m.dataset, name, "run has no outcomes"});
      continue;
    }
    for (const auto& q : run.outcomes) {
      if (q.query_id.empty()) {
        out.push_back({ViolationKind::empty_query_id, m.dataset, name, "empty query_id"});
        break;
      }
    }
    auto ids = sorted_ids(run);
    for (std::size_t i = 1; i < ids.size(); ++i) {
      if (ids[i] == ids[i - 1]) {
        out.push_back({ViolationKind::duplicate_query, m.dataset, name,
                       "query_id '" + std::string(ids[i]) + "' appears more than once"});
        while (i + 1 < ids.size() && ids[i + 1] == ids[i]) ++i;
      }
    }
    if (run.outcomes.size() != m.total_queries) {
      out.push_back({ViolationKind::ragged_matrix, m.dataset, name,
                     "run has " + std::to_string(run.outcomes.size()) +
                         " outcomes, expected " + std::to_string(m.total_queries)});
      continue;
    }
    if (!have_reference) {
      reference_ids = std::move(ids);
      reference_technique = name;
      have_reference = true;
    } else if (ids != reference_ids) {
      out.push_back({ViolationKind::ragged_matrix, m.dataset, name,
                     "query_id set differs from technique '" + reference_technique + "'"});
    }
  }
}

}  // namespace

std::vector<Violation> validate_collection(const DatasetCollection& c) {
  std::vector<Violation> out;
  std::set<std::string_view> seen;
  for (const auto& m : c.matrices) {
    if (!seen.insert(m.dataset).second) {
      out.push_back({ViolationKind::duplicate_dataset, m.dataset, "",
                     "dataset name appears more than once in the collection"});
    }
    validate_matrix(m, out);
  }
  return out;
}

}  // namespace vprcomp
