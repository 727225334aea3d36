#include "vprcomp/contingency.hpp"

#include <unordered_map>

#include "vprcomp/error.hpp"

namespace vprcomp {

ContingencyTable build_contingency(const OutcomeMatrix& m, std::string_view primary,
                                   std::string_view secondary) {
  if (primary == secondary) {
    throw Error(Errc::same_pair, "primary and secondary are both '" + std::string(primary) + "'");
  }
  const TechniqueRun* a = m.find_run(primary);
  if (a == nullptr) {
    throw Error(Errc::unknown_technique,
                "technique '" + std::string(primary) + "' has no run on dataset '" + m.dataset + "'");
  }
  const TechniqueRun* b = m.find_run(secondary);
  if (b == nullptr) {
    throw Error(Errc::unknown_technique,
                "technique '" + std::string(secondary) + "' has no run on dataset '" + m.dataset + "'");
  }

  ContingencyTable t;
  t.dataset = m.dataset;
  t.primary = std::string(primary);
  t.secondary = std::string(secondary);

  auto classify = [&t](bool ca, bool cb) {
    if (ca && cb) ++t.both_correct;
    else if (ca) ++t.only_primary;
    else if (cb) ++t.only_secondary;
    else ++t.both_incorrect;
  };

  // Canonicalized runs share the same query_id order, so a plain zip works;
  // hand-built matrices take the id-join path below.
  bool zipped = a->outcomes.size() == b->outcomes.size();
  if (zipped) {
    for (std::size_t i = 0; i < a->outcomes.size(); ++i) {
      if (a->outcomes[i].query_id != b->outcomes[i].query_id) {
        zipped = false;
        t.both_correct = t.only_primary = t.only_secondary = t.both_incorrect = 0;
        break;
      }
      classify(a->outcomes[i].correct, b->outcomes[i].correct);
    }
  }
  if (!zipped) {
    std::unordered_map<std::string_view, bool> by_id;
    by_id.reserve(b->outcomes.size());
    for (const auto& q : b->outcomes) by_id.emplace(q.query_id, q.correct);
    if (by_id.size() != a->outcomes.size()) {
      throw Error(Errc::ragged_matrix,
                  "dataset '" + m.dataset + "': runs of '" + std::string(primary) + "' and '" +
                      std::string(secondary) + "' cover different query_id sets");
    }
    for (const auto& qa : a->outcomes) {
      auto it = by_id.find(qa.query_id);
      if (it == by_id.end()) {
        throw Error(Errc::ragged_matrix,
                    "dataset '" + m.dataset + "': query_id '" + qa.query_id + "' missing from '" +
                        std::string(secondary) + "'");
      }
      classify(qa.correct, it->second);
    }
  }

  t.total = t.both_correct + t.only_primary + t.only_secondary + t.both_incorrect;
  return t;
}

ContingencyTable transpose(const ContingencyTable& t) {
  ContingencyTable out = t;
  out.primary = t.secondary;
  out.secondary = t.primary;
  out.only_primary = t.only_secondary;
  out.only_secondary = t.only_primary;
  return out;
}

McNemarResult mcnemar(const ContingencyTable& t) {
  McNemarResult r;
  r.discordant_total = t.only_secondary + t.only_primary;
  if (r.discordant_total == 0) {
    r.degenerate = true;
    return r;
  }
  const std::uint64_t diff = t.only_secondary >= t.only_primary
                                 ? t.only_secondary - t.only_primary
                                 : t.only_primary - t.only_secondary;
  const double corrected = static_cast<double>(diff) - 1.0;
  r.statistic = corrected * corrected / static_cast<double>(r.discordant_total);
  r.significant_at_05 = r.statistic > kChi2Critical05;
  return r;
}

}  // namespace vprcomp
