#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace vprcomp {

// One ground-truth-adjudicated match result for a single query image.
// Whether a retrieved match counts as correct is decided upstream; this
// library only consumes the boolean verdicts.
struct QueryOutcome {
  std::string query_id;
  bool correct = false;

  friend bool operator==(const QueryOutcome&, const QueryOutcome&) = default;
};

// One technique's outcome column over a dataset. Ingestion and generation
// store outcomes sorted by query_id so runs over the same dataset align
// index-wise; consumers fall back to id joins for hand-built data.
struct TechniqueRun {
  std::string technique;
  std::vector<QueryOutcome> outcomes;

  std::size_t correct_count() const;

  friend bool operator==(const TechniqueRun&, const TechniqueRun&) = default;
};

using RunMap = std::map<std::string, TechniqueRun, std::less<>>;

// All recorded outcomes for one dataset, one run per technique. Alignment
// across runs is by query_id, never by input row order.
struct OutcomeMatrix {
  std::string dataset;
  std::size_t total_queries = 0;
  RunMap runs;

  const TechniqueRun* find_run(std::string_view technique) const;
  std::vector<std::string> technique_names() const;

  friend bool operator==(const OutcomeMatrix&, const OutcomeMatrix&) = default;
};

struct DatasetCollection {
  std::vector<OutcomeMatrix> matrices;

  const OutcomeMatrix* find_dataset(std::string_view name) const;
  std::vector<std::string> dataset_names() const;    // collection order
  std::vector<std::string> technique_names() const;  // sorted union

  friend bool operator==(const DatasetCollection&, const DatasetCollection&) = default;
};

// Fraction of the dataset's queries the technique matched correctly.
// Throws Error(unknown_technique) when the technique has no run in m.
double technique_performance(const OutcomeMatrix& m, std::string_view technique);

enum class ViolationKind {
  duplicate_dataset,
  duplicate_query,
  empty_query_id,
  empty_run,
  ragged_matrix,
  too_few_techniques,
  query_count_mismatch,
};

constexpr const char* violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::duplicate_dataset: return "DuplicateDataset";
    case ViolationKind::duplicate_query: return "DuplicateQuery";
    case ViolationKind::empty_query_id: return "EmptyQueryId";
    case ViolationKind::empty_run: return "EmptyRun";
    case ViolationKind::ragged_matrix: return "RaggedMatrix";
    case ViolationKind::too_few_techniques: return "TooFewTechniques";
    case ViolationKind::query_count_mismatch: return "QueryCountMismatch";
  }
  return "UnknownViolation";
}

// One structural-integrity finding. Violations are data, not failures;
// callers decide whether to treat them as fatal.
struct Violation {
  ViolationKind kind;
  std::string dataset;
  std::string technique;  // empty for dataset-level findings
  std::string detail;
};

std::string to_string(const Violation& v);

// Checks every structural invariant and returns all findings. Pure: never
// throws, never mutates. An empty result means the collection is fit for
// pairwise analysis.
std::vector<Violation> validate_collection(const DatasetCollection& c);

}  // namespace vprcomp
