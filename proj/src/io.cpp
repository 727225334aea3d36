#include "vprcomp/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "csv_util.hpp"
#include "vprcomp/error.hpp"

namespace vprcomp {
namespace {

constexpr std::string_view kCsvHeader = "dataset,technique,query_id,correct";

// dataset -> technique -> raw outcome rows, sorted by the map keys
using Accumulator = std::map<std::string, std::map<std::string, std::vector<QueryOutcome>>>;

DatasetCollection finalize(Accumulator&& acc) {
  DatasetCollection c;
  for (auto& [dataset, techs] : acc) {
    OutcomeMatrix m;
    m.dataset = dataset;
    const std::vector<QueryOutcome>* reference = nullptr;
    std::string reference_technique;
    for (auto& [technique, outcomes] : techs) {
      std::sort(outcomes.begin(), outcomes.end(),
                [](const QueryOutcome& a, const QueryOutcome& b) {
                  return a.query_id < b.query_id;
                });
      for (std::size_t i = 1; i < outcomes.size(); ++i) {
        if (outcomes[i].query_id == outcomes[i - 1].query_id) {
          throw Error(Errc::duplicate_query,
                      "dataset '" + dataset + "', technique '" + technique +
                          "': query_id '" + outcomes[i].query_id +
                          "' appears more than once");
        }
      }
      if (reference != nullptr) {
        bool same = outcomes.size() == reference->size() &&
                    std::equal(outcomes.begin(), outcomes.end(), reference->begin(),
                               [](const QueryOutcome& a, const QueryOutcome& b) {
                                 return a.query_id == b.query_id;
                               });
        if (!same) {
          throw Error(Errc::ragged_matrix,
                      "dataset '" + dataset + "': technique '" + technique +
                          "' does not cover the same query_id set as '" +
                          reference_technique + "'");
        }
      }
      auto [it, inserted] = m.runs.emplace(technique, TechniqueRun{technique, std::move(outcomes)});
      if (reference == nullptr) {
        reference = &it->second.outcomes;
        reference_technique = technique;
      }
    }
    m.total_queries = m.runs.begin()->second.outcomes.size();
    c.matrices.push_back(std::move(m));
  }
  return c;
}

Accumulator accumulate_csv(std::string_view text) {
  auto records = detail::parse_csv(text);
  if (records.empty()) throw Error(Errc::empty_input, "input contains no CSV records");

  static const std::vector<std::string> expected = {"dataset", "technique", "query_id", "correct"};
  if (records.front().fields != expected) {
    throw Error(Errc::parse_error,
                "line 1: header must be exactly '" + std::string(kCsvHeader) + "'");
  }
  if (records.size() == 1) throw Error(Errc::empty_input, "input contains no outcome rows");

  Accumulator acc;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    const std::string at = "line " + std::to_string(rec.line) + ": ";
    if (rec.fields.size() != 4) {
      throw Error(Errc::parse_error,
                  at + "expected 4 fields, got " + std::to_string(rec.fields.size()));
    }
    const std::string& dataset = rec.fields[0];
    const std::string& technique = rec.fields[1];
    const std::string& query_id = rec.fields[2];
    const std::string& flag = rec.fields[3];
    if (dataset.empty()) throw Error(Errc::parse_error, at + "empty dataset name");
    if (technique.empty()) throw Error(Errc::parse_error, at + "empty technique name");
    if (query_id.empty()) throw Error(Errc::parse_error, at + "empty query_id");
    if (flag != "0" && flag != "1") {
      throw Error(Errc::parse_error, at + "correct must be '0' or '1', got '" + flag + "'");
    }
    acc[dataset][technique].push_back({query_id, flag == "1"});
  }
  return acc;
}

std::string require_string(const nlohmann::json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw Error(Errc::parse_error, std::string("missing or non-string field '") + key + "'");
  }
  std::string v = it->get<std::string>();
  if (v.empty()) {
    throw Error(Errc::parse_error, std::string("field '") + key + "' must be non-empty");
  }
  return v;
}

Accumulator accumulate_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
  if (!doc.is_array()) throw Error(Errc::parse_error, "top-level JSON value must be an array");
  if (doc.empty()) throw Error(Errc::empty_input, "input contains no outcome records");

  Accumulator acc;
  for (const auto& el : doc) {
    if (!el.is_object()) throw Error(Errc::parse_error, "each record must be an object");
    std::string dataset = require_string(el, "dataset");
    std::string technique = require_string(el, "technique");
    auto out_it = el.find("outcomes");
    if (out_it == el.end() || !out_it->is_array() || out_it->empty()) {
      throw Error(Errc::parse_error, "dataset '" + dataset + "', technique '" + technique +
                                         "': 'outcomes' must be a non-empty array");
    }
    auto& bucket = acc[dataset][technique];
    for (const auto& o : *out_it) {
      if (!o.is_object()) throw Error(Errc::parse_error, "each outcome must be an object");
      std::string query_id = require_string(o, "query_id");
      auto c_it = o.find("correct");
      if (c_it == o.end() || !c_it->is_boolean()) {
        throw Error(Errc::parse_error, "outcome '" + query_id + "': 'correct' must be a boolean");
      }
      bucket.push_back({std::move(query_id), c_it->get<bool>()});
    }
  }
  return acc;
}

}  // namespace

OutcomeFormat format_from_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".csv") return OutcomeFormat::csv;
  if (ext == ".json") return OutcomeFormat::json;
  throw Error(Errc::invalid_argument,
              "cannot infer format from extension of '" + path.string() + "'");
}

DatasetCollection parse_outcomes(std::string_view text, OutcomeFormat format) {
  Accumulator acc = format == OutcomeFormat::csv ? accumulate_csv(text) : accumulate_json(text);
  return finalize(std::move(acc));
}

DatasetCollection ingest_outcomes(const std::filesystem::path& path, OutcomeFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(Errc::io_error, "error while reading '" + path.string() + "'");
  return parse_outcomes(buf.str(), format);
}

std::string format_outcomes(const DatasetCollection& c, OutcomeFormat format) {
  if (format == OutcomeFormat::csv) {
    std::string out{kCsvHeader};
    out += '\n';
    for (const auto& m : c.matrices) {
      for (const auto& [name, run] : m.runs) {
        for (const auto& q : run.outcomes) {
          out += detail::csv_escape(m.dataset);
          out += ',';
          out += detail::csv_escape(name);
          out += ',';
          out += detail::csv_escape(q.query_id);
          out += q.correct ? ",1\n" : ",0\n";
        }
      }
    }
    return out;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& m : c.matrices) {
    for (const auto& [name, run] : m.runs) {
      nlohmann::ordered_json rec;
      rec["dataset"] = m.dataset;
      rec["technique"] = name;
      nlohmann::ordered_json outs = nlohmann::ordered_json::array();
      for (const auto& q : run.outcomes) {
        outs.push_back({{"query_id", q.query_id}, {"correct", q.correct}});
      }
      rec["outcomes"] = std::move(outs);
      arr.push_back(std::move(rec));
    }
  }
  return arr.dump(2) + "\n";
}

void write_outcomes(const DatasetCollection& c, const std::filesystem::path& path,
                    OutcomeFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot open '" + path.string() + "' for writing");
  out << format_outcomes(c, format);
  out.flush();
  if (!out.good()) throw Error(Errc::io_error, "error while writing '" + path.string() + "'");
}

}  // namespace vprcomp
