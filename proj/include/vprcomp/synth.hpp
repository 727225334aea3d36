#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vprcomp/outcomes.hpp"

namespace vprcomp {

// Deterministic 64-bit generator (SplitMix64). The exact algorithm is part
// of the output contract so independent re-implementations reproduce the
// same matrices for equal seeds:
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// bounded(n) reduces a draw into [0, n) with the 128-bit multiply-shift
// (next() * n) >> 64. Shuffles are backward Fisher-Yates: for i from
// len-1 down to 1, swap element i with element bounded(i + 1).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t bounded(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

struct TechniqueSpec {
  std::string name;
  double accuracy = 0.0;  // target correct fraction in [0, 1]
};

// Recipe for one synthetic outcome matrix. Correct counts are exact, not
// sampled: each technique gets round(accuracy * n_queries) correct
// outcomes at seeded-shuffled positions. pairwise_agreement, when set,
// fixes where each consecutive technique pair's correct-set overlap lands
// inside its feasible range [max(0, cA + cB - n), min(cA, cB)]: -1 is the
// minimum, +1 the maximum, linear in between.
struct SynthSpec {
  std::uint64_t seed = 0;
  std::size_t n_queries = 0;
  std::vector<TechniqueSpec> techniques;
  std::optional<double> pairwise_agreement;
};

// Same spec, same matrix, bit for bit. Throws Error(invalid_spec) when the
// spec violates its own constraints.
OutcomeMatrix generate(const SynthSpec& spec, std::string_view dataset_name = "synthetic");

struct NamedSynthSpec {
  std::string dataset;
  SynthSpec spec;
};

DatasetCollection generate_collection(std::span<const NamedSynthSpec> specs);

// JSON spec file: an array of objects with "dataset", "n_queries",
// "techniques" [{ "name", "accuracy" }], optional "seed" and optional
// "pairwise_agreement". Entries without a seed get base_seed + index.
std::vector<NamedSynthSpec> load_synth_specs(const std::filesystem::path& path,
                                             std::uint64_t base_seed = 0);

}  // namespace vprcomp
