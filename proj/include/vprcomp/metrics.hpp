#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vprcomp/contingency.hpp"
#include "vprcomp/outcomes.hpp"

namespace vprcomp {

// How well the secondary technique covers the primary's failures on one
// dataset: value = rescued / failures_of_primary. Undefined when the
// primary never fails there; undefined scores are excluded from every
// aggregate.
struct ComplementarityScore {
  std::string dataset;
  std::string primary;
  std::string secondary;
  double value = 0.0;
  bool defined = false;
  std::uint64_t failures_of_primary = 0;  // M = T + Z
  std::uint64_t rescued = 0;              // T
};

ComplementarityScore complementarity(const ContingencyTable& t);

// One ordered pair's defined scores across a collection, in collection
// order. Datasets missing either technique contribute nothing.
struct ScoreSet {
  std::string primary;
  std::string secondary;
  std::vector<ComplementarityScore> scores;
};

// May return an empty set; score_set throws Error(no_defined_scores)
// instead so callers that require data fail loudly.
ScoreSet collect_scores(const DatasetCollection& c, std::string_view primary,
                        std::string_view secondary);
ScoreSet score_set(const DatasetCollection& c, std::string_view primary,
                   std::string_view secondary);

// Max / min / median of a pair's defined scores. Median of an even-sized
// set is the mean of the two central order statistics.
struct BoundsSummary {
  std::string primary;
  std::string secondary;
  double upper = 0.0;
  double lower = 0.0;
  double median = 0.0;
  std::size_t n_datasets = 0;
};

BoundsSummary bounds(const ScoreSet& s);

// Fraction of a dataset's queries matched by at least one technique of the
// combination; an upper bound for any fusion of them.
struct MapeEstimate {
  std::string dataset;
  std::vector<std::string> techniques;
  double value = 0.0;
  std::uint64_t covered = 0;
  std::uint64_t total = 0;
};

MapeEstimate mape_pair(const ContingencyTable& t);

// k-way generalization via the union of correct-query sets; for exactly
// two techniques the result equals mape_pair bit for bit.
MapeEstimate mape_k(const OutcomeMatrix& m, std::span<const std::string> techniques);

// Residual of the count-algebra identity
//   mape = perf_primary + cba * (1 - perf_primary),
// which is exact in the underlying integers; anything above ~1e-12 means a
// computation path is broken. Throws Error(undefined_complementarity) when
// the primary has no failures.
double mape_identity_check(const ContingencyTable& t);

}  // namespace vprcomp
