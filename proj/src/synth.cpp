#include "vprcomp/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "vprcomp/error.hpp"

namespace vprcomp {
namespace {

void fisher_yates(std::vector<std::uint32_t>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.bounded(i)]);
  }
}

void check_spec(const SynthSpec& spec) {
  if (spec.n_queries == 0) throw Error(Errc::invalid_spec, "n_queries must be at least 1");
  if (spec.techniques.empty()) throw Error(Errc::invalid_spec, "at least one technique required");
  std::set<std::string_view> names;
  for (const auto& t : spec.techniques) {
    if (t.name.empty()) throw Error(Errc::invalid_spec, "technique names must be non-empty");
    if (!names.insert(t.name).second) {
      throw Error(Errc::invalid_spec, "technique '" + t.name + "' listed more than once");
    }
    if (!(t.accuracy >= 0.0 && t.accuracy <= 1.0)) {
      throw Error(Errc::invalid_spec,
                  "accuracy of '" + t.name + "' must lie in [0, 1]");
    }
  }
  if (spec.pairwise_agreement &&
      !(*spec.pairwise_agreement >= -1.0 && *spec.pairwise_agreement <= 1.0)) {
    throw Error(Errc::invalid_spec, "pairwise_agreement must lie in [-1, 1]");
  }
}

std::vector<std::string> make_query_ids(std::size_t n) {
  std::size_t width = 6;
  for (std::size_t v = n; v >= 1000000; v /= 10) ++width;
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    std::string digits = std::to_string(i);
    ids.push_back("q" + std::string(width - digits.size(), '0') + digits);
  }
  return ids;
}

}  // namespace

OutcomeMatrix generate(const SynthSpec& spec, std::string_view dataset_name) {
  check_spec(spec);
  const std::size_t n = spec.n_queries;
  const std::vector<std::string> ids = make_query_ids(n);
  SplitMix64 rng(spec.seed);

  OutcomeMatrix m;
  m.dataset = std::string(dataset_name);
  m.total_queries = n;

  std::vector<char> prev(n, 0);
  std::uint64_t prev_count = 0;
  for (std::size_t ti = 0; ti < spec.techniques.size(); ++ti) {
    const TechniqueSpec& tech = spec.techniques[ti];
    const std::uint64_t c = std::min<std::uint64_t>(
        static_cast<std::uint64_t>(std::llround(tech.accuracy * static_cast<double>(n))), n);

    std::vector<char> cur(n, 0);
    if (ti == 0 || !spec.pairwise_agreement) {
      std::vector<std::uint32_t> idx(n);
      std::iota(idx.begin(), idx.end(), 0u);
      fisher_yates(idx, rng);
      for (std::uint64_t j = 0; j < c; ++j) cur[idx[j]] = 1;
    } else {
      // Place the overlap with the previous technique's correct set at the
      // requested point of its feasible range.
      const double fraction = (*spec.pairwise_agreement + 1.0) / 2.0;
      const std::uint64_t lo = prev_count + c > n ? prev_count + c - n : 0;
      const std::uint64_t hi = std::min(prev_count, c);
      const std::uint64_t overlap =
          lo + static_cast<std::uint64_t>(std::llround(fraction * static_cast<double>(hi - lo)));

      std::vector<std::uint32_t> ins;
      std::vector<std::uint32_t> outs;
      ins.reserve(prev_count);
      outs.reserve(n - prev_count);
      for (std::size_t i = 0; i < n; ++i) {
        (prev[i] ? ins : outs).push_back(static_cast<std::uint32_t>(i));
      }
      fisher_yates(ins, rng);
      fisher_yates(outs, rng);
      for (std::uint64_t j = 0; j < overlap; ++j) cur[ins[j]] = 1;
      for (std::uint64_t j = 0; j < c - overlap; ++j) cur[outs[j]] = 1;
    }

    TechniqueRun run;
    run.technique = tech.name;
    run.outcomes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      run.outcomes.push_back({ids[i], cur[i] != 0});
    }
    m.runs.emplace(tech.name, std::move(run));
    prev = std::move(cur);
    prev_count = c;
  }
  return m;
}

DatasetCollection generate_collection(std::span<const NamedSynthSpec> specs) {
  if (specs.empty()) throw Error(Errc::empty_input, "no dataset specs given");
  std::set<std::string_view> names;
  DatasetCollection c;
  for (const auto& entry : specs) {
    if (entry.dataset.empty()) throw Error(Errc::invalid_spec, "dataset names must be non-empty");
    if (!names.insert(entry.dataset).second) {
      throw Error(Errc::duplicate_dataset,
                  "dataset '" + entry.dataset + "' listed more than once");
    }
    c.matrices.push_back(generate(entry.spec, entry.dataset));
  }
  return c;
}

std::vector<NamedSynthSpec> load_synth_specs(const std::filesystem::path& path,
                                             std::uint64_t base_seed) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
  if (!doc.is_array()) throw Error(Errc::parse_error, "spec file must hold a JSON array");
  if (doc.empty()) throw Error(Errc::empty_input, "spec file holds no dataset specs");

  std::vector<NamedSynthSpec> out;
  std::uint64_t index = 0;
  for (const auto& el : doc) {
    if (!el.is_object()) throw Error(Errc::parse_error, "each spec must be an object");
    NamedSynthSpec entry;
    auto ds = el.find("dataset");
    if (ds == el.end() || !ds->is_string() || ds->get<std::string>().empty()) {
      throw Error(Errc::parse_error, "spec needs a non-empty string 'dataset'");
    }
    entry.dataset = ds->get<std::string>();
    auto nq = el.find("n_queries");
    if (nq == el.end() || !nq->is_number_unsigned()) {
      throw Error(Errc::parse_error, "spec '" + entry.dataset + "' needs unsigned 'n_queries'");
    }
    entry.spec.n_queries = nq->get<std::size_t>();
    auto seed = el.find("seed");
    if (seed != el.end() && !seed->is_null()) {
      if (!seed->is_number_unsigned()) {
        throw Error(Errc::parse_error, "spec '" + entry.dataset + "': 'seed' must be unsigned");
      }
      entry.spec.seed = seed->get<std::uint64_t>();
    } else {
      entry.spec.seed = base_seed + index;
    }
    auto techs = el.find("techniques");
    if (techs == el.end() || !techs->is_array() || techs->empty()) {
      throw Error(Errc::parse_error,
                  "spec '" + entry.dataset + "' needs a non-empty 'techniques' array");
    }
    for (const auto& t : *techs) {
      if (!t.is_object() || !t.contains("name") || !t["name"].is_string() ||
          !t.contains("accuracy") || !t["accuracy"].is_number()) {
        throw Error(Errc::parse_error,
                    "spec '" + entry.dataset + "': techniques need 'name' and numeric 'accuracy'");
      }
      entry.spec.techniques.push_back({t["name"].get<std::string>(), t["accuracy"].get<double>()});
    }
    auto agree = el.find("pairwise_agreement");
    if (agree != el.end() && !agree->is_null()) {
      if (!agree->is_number()) {
        throw Error(Errc::parse_error,
                    "spec '" + entry.dataset + "': 'pairwise_agreement' must be a number");
      }
      entry.spec.pairwise_agreement = agree->get<double>();
    }
    out.push_back(std::move(entry));
    ++index;
  }
  return out;
}

}  // namespace vprcomp
