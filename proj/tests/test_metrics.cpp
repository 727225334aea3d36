#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "support.hpp"
#include "vprcomp/error.hpp"
#include "vprcomp/metrics.hpp"
#include "vprcomp/synth.hpp"

using namespace vprcomp;
using testsupport::code_of;
using testsupport::make_matrix;
using testsupport::make_table;

TEST_CASE("complementarity") {
  SUBCASE("direct ratio") {
    const ComplementarityScore s = complementarity(make_table(10, 5, 4, 6));
    CHECK(s.defined);
    CHECK(s.failures_of_primary == 10);
    CHECK(s.rescued == 4);
    CHECK(s.value == 0.4);
  }
  SUBCASE("secondary rescues nothing") {
    const ComplementarityScore s = complementarity(make_table(10, 5, 0, 5));
    CHECK(s.defined);
    CHECK(s.value == 0.0);
  }
  SUBCASE("secondary rescues everything") {
    const ComplementarityScore s = complementarity(make_table(10, 5, 7, 0));
    CHECK(s.defined);
    CHECK(s.value == 1.0);
  }
  SUBCASE("perfect primary has no defined score") {
    const ComplementarityScore s = complementarity(make_table(10, 5, 0, 0));
    CHECK_FALSE(s.defined);
  }
}

namespace {

// One dataset where 'p' fails `failures` of 20 queries and each partner
// rescues a chosen number of those failures.
OutcomeMatrix rescue_matrix(const std::string& dataset, std::size_t failures,
                            const std::vector<std::pair<std::string, std::size_t>>& partners) {
  std::string p_bits(20, '1');
  for (std::size_t i = 0; i < failures; ++i) p_bits[i] = '0';
  std::vector<std::pair<std::string, std::string>> rows = {{"p", p_bits}};
  for (const auto& [name, rescued] : partners) {
    std::string bits(20, '0');
    for (std::size_t i = 0; i < rescued; ++i) bits[i] = '1';
    rows.push_back({name, bits});
  }
  return make_matrix(dataset, rows);
}

}  // namespace

TEST_CASE("score_set") {
  SUBCASE("one entry per dataset where the score is defined") {
    DatasetCollection c;
    c.matrices.push_back(rescue_matrix("d1", 10, {{"u", 4}}));
    c.matrices.push_back(rescue_matrix("d2", 0, {{"u", 0}}));   // p is perfect here
    c.matrices.push_back(rescue_matrix("d3", 10, {{"u", 8}}));
    const ScoreSet s = score_set(c, "p", "u");
    REQUIRE(s.scores.size() == 2);
    CHECK(s.scores[0].dataset == "d1");
    CHECK(s.scores[0].value == 0.4);
    CHECK(s.scores[1].dataset == "d3");
    CHECK(s.scores[1].value == 0.8);
  }
  SUBCASE("defined everywhere") {
    DatasetCollection c;
    for (int i = 0; i < 10; ++i) {
      c.matrices.push_back(rescue_matrix("d" + std::to_string(i), 10, {{"u", 5}}));
    }
    CHECK(score_set(c, "p", "u").scores.size() == 10);
  }
  SUBCASE("perfect primary everywhere") {
    DatasetCollection c;
    c.matrices.push_back(rescue_matrix("d1", 0, {{"u", 0}}));
    CHECK(code_of([&] { score_set(c, "p", "u"); }) == Errc::no_defined_scores);
    CHECK(collect_scores(c, "p", "u").scores.empty());
  }
  SUBCASE("pair never co-occurs") {
    DatasetCollection c;
    c.matrices.push_back(make_matrix("d1", {{"p", "10"}, {"x", "01"}}));
    c.matrices.push_back(make_matrix("d2", {{"u", "10"}, {"x", "01"}}));
    CHECK(code_of([&] { score_set(c, "p", "u"); }) == Errc::no_defined_scores);
  }
  SUBCASE("same technique twice") {
    DatasetCollection c;
    c.matrices.push_back(rescue_matrix("d1", 10, {{"u", 4}}));
    CHECK(code_of([&] { score_set(c, "p", "p"); }) == Errc::same_pair);
  }
}

namespace {

ScoreSet literal_scores(const std::vector<double>& values) {
  ScoreSet s{"p", "u", {}};
  for (std::size_t i = 0; i < values.size(); ++i) {
    ComplementarityScore score;
    score.dataset = "d" + std::to_string(i);
    score.primary = "p";
    score.secondary = "u";
    score.defined = true;
    score.value = values[i];
    s.scores.push_back(score);
  }
  return s;
}

}  // namespace

TEST_CASE("bounds") {
  SUBCASE("max, min, median") {
    const BoundsSummary b = bounds(literal_scores({0.2, 0.9, 0.5}));
    CHECK(b.upper == 0.9);
    CHECK(b.lower == 0.2);
    CHECK(b.median == 0.5);
    CHECK(b.n_datasets == 3);
  }
  SUBCASE("singleton") {
    const BoundsSummary b = bounds(literal_scores({0.4}));
    CHECK(b.upper == 0.4);
    CHECK(b.lower == 0.4);
    CHECK(b.median == 0.4);
  }
  SUBCASE("even count uses the midpoint of the central pair") {
    const BoundsSummary b = bounds(literal_scores({0.1, 0.2, 0.6, 0.8}));
    CHECK(b.median == doctest::Approx(0.4).epsilon(1e-15));
  }
  SUBCASE("empty set") {
    CHECK(code_of([] { bounds(ScoreSet{"p", "u", {}}); }) == Errc::empty_score_set);
  }
  SUBCASE("ordering and growth laws") {
    SplitMix64 rng(5150);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> values;
      BoundsSummary prev;
      for (int step = 0; step < 12; ++step) {
        values.push_back(static_cast<double>(rng.bounded(1001)) / 1000.0);
        const BoundsSummary b = bounds(literal_scores(values));
        CHECK(b.lower <= b.median);
        CHECK(b.median <= b.upper);
        CHECK(b.lower >= 0.0);
        CHECK(b.upper <= 1.0);
        if (step > 0) {
          CHECK(b.lower <= prev.lower);
          CHECK(b.upper >= prev.upper);
        }
        prev = b;
      }
    }
  }
}

TEST_CASE("mape_pair") {
  SUBCASE("direct arithmetic") {
    const MapeEstimate e = mape_pair(make_table(20, 2, 3, 7));
    CHECK(e.covered == 25);
    CHECK(e.total == 32);
    CHECK(e.value == 25.0 / 32.0);
  }
  SUBCASE("full coverage") {
    const MapeEstimate e = mape_pair(make_table(20, 5, 7, 0));
    CHECK(e.value == 1.0);
  }
  SUBCASE("identical techniques collapse to the primary's performance") {
    const MapeEstimate e = mape_pair(make_table(12, 0, 0, 4));
    CHECK(e.value == 12.0 / 16.0);
  }
  SUBCASE("transpose invariance and dominance") {
    SplitMix64 rng(31337);
    for (int i = 0; i < 500; ++i) {
      const ContingencyTable t = testsupport::random_table(rng);
      const double mape = mape_pair(t).value;
      CHECK(mape == mape_pair(transpose(t)).value);
      const double perf_a = static_cast<double>(t.only_primary + t.both_correct) /
                            static_cast<double>(t.total);
      const double perf_b = static_cast<double>(t.only_secondary + t.both_correct) /
                            static_cast<double>(t.total);
      CHECK(mape >= std::max(perf_a, perf_b));
      CHECK(mape <= std::min(1.0, perf_a + perf_b) + 1e-15);
      CHECK(mape >= 0.0);
      CHECK(mape <= 1.0);
    }
  }
}

TEST_CASE("mape_k") {
  SUBCASE("two techniques reduce to the pair estimate bit for bit") {
    SplitMix64 rng(808);
    for (int i = 0; i < 40; ++i) {
      const OutcomeMatrix m = generate(testsupport::random_spec(rng, 2, 4, 4, 50), "d");
      const auto names = m.technique_names();
      const std::vector<std::string> pair = {names[0], names[1]};
      const MapeEstimate via_k = mape_k(m, pair);
      const MapeEstimate via_pair = mape_pair(build_contingency(m, names[0], names[1]));
      CHECK(via_k.covered == via_pair.covered);
      CHECK(via_k.value == via_pair.value);  // exact, same integer division
    }
  }
  SUBCASE("disjoint correct sets add up") {
    // three techniques, correct on non-overlapping prefixes of 3, 4, 5 queries
    const OutcomeMatrix m = make_matrix("d", {{"a", "11100000000000000000"},
                                              {"b", "00011110000000000000"},
                                              {"c", "00000001111100000000"}});
    const std::vector<std::string> names = {"a", "b", "c"};
    const MapeEstimate e = mape_k(m, names);
    CHECK(e.covered == 12);
    CHECK(e.total == 20);
    CHECK(e.value == 0.6);
  }
  SUBCASE("matches the per-query brute-force loop") {
    SplitMix64 rng(4242);
    for (int i = 0; i < 40; ++i) {
      SynthSpec spec = testsupport::random_spec(rng, 4, 4, 50, 50);
      const OutcomeMatrix m = generate(spec, "d");
      const auto names = m.technique_names();
      for (std::size_t k = 2; k <= names.size(); ++k) {
        const std::vector<std::string> subset(names.begin(), names.begin() + k);
        const MapeEstimate e = mape_k(m, subset);
        CHECK(e.covered == testsupport::brute_union_correct(m, subset));
      }
    }
  }
  SUBCASE("adding a technique never decreases the estimate") {
    SplitMix64 rng(99);
    for (int i = 0; i < 30; ++i) {
      const OutcomeMatrix m = generate(testsupport::random_spec(rng, 3, 5, 5, 60), "d");
      const auto names = m.technique_names();
      double prev = 0.0;
      for (std::size_t k = 2; k <= names.size(); ++k) {
        const std::vector<std::string> subset(names.begin(), names.begin() + k);
        const double value = mape_k(m, subset).value;
        CHECK(value >= prev);
        prev = value;
      }
    }
  }
  SUBCASE("argument order does not change the value") {
    const OutcomeMatrix m = make_matrix("d", {{"a", "1100"}, {"b", "1010"}, {"c", "0001"}});
    const std::vector<std::string> fwd = {"a", "b", "c"};
    const std::vector<std::string> rev = {"c", "b", "a"};
    CHECK(mape_k(m, fwd).value == mape_k(m, rev).value);
  }
  SUBCASE("errors") {
    const OutcomeMatrix m = make_matrix("d", {{"a", "10"}, {"b", "01"}});
    const std::vector<std::string> unknown = {"a", "nope"};
    CHECK(code_of([&] { mape_k(m, unknown); }) == Errc::unknown_technique);
    const std::vector<std::string> dup = {"a", "a"};
    CHECK(code_of([&] { mape_k(m, dup); }) == Errc::duplicate_technique);
    const std::vector<std::string> single = {"a"};
    CHECK(code_of([&] { mape_k(m, single); }) == Errc::invalid_argument);
  }
}

TEST_CASE("mape identity") {
  SUBCASE("exact algebra example") {
    // perf_a = 0.90, cba = 0.4, mape = 0.90 + 0.4 * 0.10 = 0.94; the
    // identity is exact in the counts, so only rounding noise remains
    const ContingencyTable t = make_table(80, 10, 4, 6);
    CHECK(mape_pair(t).value == 0.94);
    CHECK(mape_identity_check(t) <= 1e-15);
  }
  SUBCASE("no rescues collapses to the primary's performance") {
    const ContingencyTable t = make_table(5, 3, 0, 2);
    CHECK(mape_identity_check(t) == 0.0);
  }
  SUBCASE("undefined when the primary never fails") {
    CHECK(code_of([] { mape_identity_check(make_table(5, 3, 0, 0)); }) ==
          Errc::undefined_complementarity);
  }
  SUBCASE("residual stays below 1e-12 over random tables") {
    SplitMix64 rng(616);
    for (int i = 0; i < 2000; ++i) {
      const ContingencyTable t = testsupport::random_table(rng, 100, true);
      CHECK(mape_identity_check(t) <= 1e-12);
    }
  }
}

TEST_CASE("redundant pair: identical outcome columns") {
  const OutcomeMatrix m = make_matrix("d", {{"a", "110100"}, {"b", "110100"}});
  const ContingencyTable t = build_contingency(m, "a", "b");
  const ComplementarityScore s = complementarity(t);
  CHECK(s.defined);
  CHECK(s.value == 0.0);
  CHECK(mape_pair(t).value == technique_performance(m, "a"));
}
