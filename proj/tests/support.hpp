#pragma once

// Shared fixtures and oracles for the unit and acceptance suites. The
// brute-force counters here are deliberately written against std::map
// joins, independent of the library's zip/hash alignment paths.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vprcomp/contingency.hpp"
#include "vprcomp/error.hpp"
#include "vprcomp/outcomes.hpp"
#include "vprcomp/synth.hpp"

namespace testsupport {

inline std::map<std::string, bool> outcome_map(const vprcomp::TechniqueRun& run) {
  std::map<std::string, bool> m;
  for (const auto& q : run.outcomes) m[q.query_id] = q.correct;
  return m;
}

struct QuadCounts {
  std::uint64_t x = 0;
  std::uint64_t w = 0;
  std::uint64_t t = 0;
  std::uint64_t z = 0;
};

inline QuadCounts brute_quadrants(const vprcomp::OutcomeMatrix& m, const std::string& primary,
                                  const std::string& secondary) {
  const auto pa = outcome_map(m.runs.at(primary));
  const auto pb = outcome_map(m.runs.at(secondary));
  QuadCounts q;
  for (const auto& [id, ca] : pa) {
    const bool cb = pb.at(id);
    if (ca && cb) ++q.x;
    else if (ca) ++q.w;
    else if (cb) ++q.t;
    else ++q.z;
  }
  return q;
}

inline std::uint64_t brute_union_correct(const vprcomp::OutcomeMatrix& m,
                                         const std::vector<std::string>& names) {
  std::map<std::string, bool> any;
  for (const auto& name : names) {
    for (const auto& q : m.runs.at(name).outcomes) {
      auto [it, inserted] = any.emplace(q.query_id, q.correct);
      if (!inserted && q.correct) it->second = true;
    }
  }
  std::uint64_t covered = 0;
  for (const auto& [id, correct] : any) {
    if (correct) ++covered;
  }
  return covered;
}

// Builds a matrix from per-technique outcome bit strings; query ids are
// q0, q1, ... in string position order.
inline vprcomp::OutcomeMatrix make_matrix(
    const std::string& dataset,
    const std::vector<std::pair<std::string, std::string>>& bit_rows) {
  vprcomp::OutcomeMatrix m;
  m.dataset = dataset;
  for (const auto& [technique, bits] : bit_rows) {
    vprcomp::TechniqueRun run;
    run.technique = technique;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      run.outcomes.push_back({"q" + std::to_string(i), bits[i] == '1'});
    }
    m.total_queries = run.outcomes.size();
    m.runs.emplace(technique, std::move(run));
  }
  return m;
}

inline vprcomp::ContingencyTable make_table(std::uint64_t x, std::uint64_t w, std::uint64_t t,
                                            std::uint64_t z, const std::string& dataset = "d",
                                            const std::string& primary = "a",
                                            const std::string& secondary = "b") {
  vprcomp::ContingencyTable table;
  table.dataset = dataset;
  table.primary = primary;
  table.secondary = secondary;
  table.both_correct = x;
  table.only_primary = w;
  table.only_secondary = t;
  table.both_incorrect = z;
  table.total = x + w + t + z;
  return table;
}

inline vprcomp::ContingencyTable random_table(vprcomp::SplitMix64& rng, std::uint64_t cap = 50,
                                              bool require_failures = false) {
  vprcomp::ContingencyTable t = make_table(rng.bounded(cap + 1), rng.bounded(cap + 1),
                                           rng.bounded(cap + 1), rng.bounded(cap + 1));
  if (require_failures && t.only_secondary + t.both_incorrect == 0) {
    t.both_incorrect = 1;
    t.total += 1;
  }
  if (t.total == 0) {
    t.both_correct = 1;
    t.total = 1;
  }
  return t;
}

inline vprcomp::SynthSpec random_spec(vprcomp::SplitMix64& rng, std::size_t min_techniques,
                                      std::size_t max_techniques, std::size_t min_queries,
                                      std::size_t max_queries) {
  vprcomp::SynthSpec spec;
  spec.seed = rng.next();
  spec.n_queries = min_queries + rng.bounded(max_queries - min_queries + 1);
  const std::size_t k = min_techniques + rng.bounded(max_techniques - min_techniques + 1);
  for (std::size_t i = 0; i < k; ++i) {
    const double accuracy =
        static_cast<double>(rng.bounded(spec.n_queries + 1)) / static_cast<double>(spec.n_queries);
    spec.techniques.push_back({"t" + std::to_string(i + 1), accuracy});
  }
  if (rng.bounded(3) != 0) {
    spec.pairwise_agreement = static_cast<double>(rng.bounded(2001)) / 1000.0 - 1.0;
  }
  return spec;
}

// Returns the error code a callable throws, if any.
template <typename Fn>
std::optional<vprcomp::Errc> code_of(Fn&& fn) {
  try {
    fn();
  } catch (const vprcomp::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testsupport
