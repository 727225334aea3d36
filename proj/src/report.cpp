#include "vprcomp/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>

#include <json.hpp>

#include "csv_util.hpp"
#include "vprcomp/contingency.hpp"
#include "vprcomp/error.hpp"
#include "vprcomp/metrics.hpp"

namespace vprcomp {
namespace {

using detail::csv_escape;
using ordered_json = nlohmann::ordered_json;

std::string fmt_ratio(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string fmt_tenths(std::uint64_t tenths) {
  return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

void require_known(const DatasetCollection& c, std::string_view technique) {
  for (const auto& m : c.matrices) {
    if (m.find_run(technique) != nullptr) return;
  }
  throw Error(Errc::unknown_technique,
              "technique '" + std::string(technique) + "' appears in no dataset");
}

// Resolves the --primary/--secondary filters into the iteration sets.
std::vector<std::string> primaries_for(const DatasetCollection& c, std::string_view filter) {
  if (filter.empty()) return c.technique_names();
  require_known(c, filter);
  return {std::string(filter)};
}

std::string join_names(std::span<const std::string> names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += " + ";
    out += n;
  }
  return out;
}

std::string md_row(std::span<const std::string> cells) {
  std::string out = "|";
  for (const auto& cell : cells) {
    out += ' ';
    out += cell;
    out += " |";
  }
  out += '\n';
  return out;
}

std::string md_separator(std::size_t columns) {
  std::string out = "|";
  for (std::size_t i = 0; i < columns; ++i) out += " --- |";
  out += '\n';
  return out;
}

// Per-(dataset, ordered pair) visitor used by the long-form surfaces.
template <typename Fn>
void for_each_pair(const DatasetCollection& c, std::string_view primary,
                   std::string_view secondary, Fn&& fn) {
  if (!primary.empty() && !secondary.empty() && primary == secondary) {
    throw Error(Errc::same_pair, "primary and secondary are both '" + std::string(primary) + "'");
  }
  const std::vector<std::string> primaries = primaries_for(c, primary);
  const std::vector<std::string> secondaries = primaries_for(c, secondary);
  for (const auto& m : c.matrices) {
    for (const auto& a : primaries) {
      if (m.find_run(a) == nullptr) continue;
      for (const auto& b : secondaries) {
        if (b == a || m.find_run(b) == nullptr) continue;
        fn(m, a, b);
      }
    }
  }
}

// ---- report content builders ---------------------------------------------

struct ComplementRow {
  ComplementarityScore score;
};

std::vector<ComplementarityScore> complement_rows(const DatasetCollection& c,
                                                  std::string_view primary,
                                                  std::string_view secondary) {
  std::vector<ComplementarityScore> rows;
  for_each_pair(c, primary, secondary, [&](const OutcomeMatrix& m, const std::string& a,
                                           const std::string& b) {
    rows.push_back(complementarity(build_contingency(m, a, b)));
  });
  return rows;
}

std::string complement_csv(const std::vector<ComplementarityScore>& rows) {
  std::string out = "dataset,primary,secondary,T,M,cba,defined\n";
  for (const auto& s : rows) {
    out += csv_escape(s.dataset) + ',' + csv_escape(s.primary) + ',' + csv_escape(s.secondary);
    out += ',' + std::to_string(s.rescued) + ',' + std::to_string(s.failures_of_primary);
    out += ',';
    out += s.defined ? fmt_ratio(s.value) : "NA";
    out += s.defined ? ",1\n" : ",0\n";
  }
  return out;
}

std::string complement_json(const std::vector<ComplementarityScore>& rows) {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["report"] = "complementarity";
  ordered_json scores = ordered_json::array();
  for (const auto& s : rows) {
    ordered_json rec;
    rec["dataset"] = s.dataset;
    rec["primary"] = s.primary;
    rec["secondary"] = s.secondary;
    rec["rescued"] = s.rescued;
    rec["failures"] = s.failures_of_primary;
    if (s.defined) rec["cba"] = s.value;
    else rec["cba"] = nullptr;
    rec["defined"] = s.defined;
    scores.push_back(std::move(rec));
  }
  doc["scores"] = std::move(scores);
  return doc.dump(2) + "\n";
}

std::string complement_markdown(const std::vector<ComplementarityScore>& rows) {
  std::string out = md_row(std::vector<std::string>{
      "dataset", "primary", "secondary", "T", "M", "cba", "defined"});
  out += md_separator(7);
  for (const auto& s : rows) {
    out += md_row(std::vector<std::string>{
        s.dataset, s.primary, s.secondary, std::to_string(s.rescued),
        std::to_string(s.failures_of_primary), s.defined ? fmt_ratio(s.value) : "NA",
        s.defined ? "1" : "0"});
  }
  return out;
}

// Chart data in the shape of the per-primary complementarity displays: one
// row per ordered pair, one column per dataset.
struct ChartRow {
  std::string primary;
  std::string secondary;
  std::vector<std::optional<double>> cba;  // one per dataset, nullopt = NA
};

std::vector<ChartRow> chart_rows(const DatasetCollection& c) {
  std::vector<ChartRow> rows;
  const std::vector<std::string> techs = c.technique_names();
  for (const auto& a : techs) {
    for (const auto& b : techs) {
      if (a == b) continue;
      ChartRow row{a, b, std::vector<std::optional<double>>(c.matrices.size())};
      for (std::size_t d = 0; d < c.matrices.size(); ++d) {
        const OutcomeMatrix& m = c.matrices[d];
        if (m.find_run(a) == nullptr || m.find_run(b) == nullptr) continue;
        const ComplementarityScore s = complementarity(build_contingency(m, a, b));
        if (s.defined) row.cba[d] = s.value;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string chart_csv(const DatasetCollection& c, const std::vector<ChartRow>& rows) {
  std::string out = "primary,secondary";
  for (const auto& name : c.dataset_names()) out += ',' + csv_escape(name);
  out += '\n';
  for (const auto& row : rows) {
    out += csv_escape(row.primary) + ',' + csv_escape(row.secondary);
    for (const auto& v : row.cba) out += ',' + (v ? fmt_ratio(*v) : std::string("NA"));
    out += '\n';
  }
  return out;
}

std::string chart_json(const DatasetCollection& c, const std::vector<ChartRow>& rows) {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["report"] = "complementarity_chart";
  doc["datasets"] = c.dataset_names();
  ordered_json series = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json rec;
    rec["primary"] = row.primary;
    rec["secondary"] = row.secondary;
    ordered_json values = ordered_json::array();
    for (const auto& v : row.cba) {
      if (v) values.push_back(*v);
      else values.push_back(nullptr);
    }
    rec["cba"] = std::move(values);
    series.push_back(std::move(rec));
  }
  doc["series"] = std::move(series);
  return doc.dump(2) + "\n";
}

std::string chart_markdown(const DatasetCollection& c, const std::vector<ChartRow>& rows) {
  std::vector<std::string> header = {"primary", "secondary"};
  for (const auto& name : c.dataset_names()) header.push_back(name);
  std::string out = md_row(header);
  out += md_separator(header.size());
  for (const auto& row : rows) {
    std::vector<std::string> cells = {row.primary, row.secondary};
    for (const auto& v : row.cba) cells.push_back(v ? fmt_ratio(*v) : "NA");
    out += md_row(cells);
  }
  return out;
}

// Bounds chart data: per primary, partners in rank order under the chosen
// criterion.
std::vector<BoundsSummary> bounds_rows(const DatasetCollection& c, RankCriterion criterion) {
  std::vector<BoundsSummary> rows;
  for (const auto& primary : c.technique_names()) {
    PartnerRanking ranking;
    try {
      ranking = rank_partners(c, primary, criterion);
    } catch (const Error& e) {
      if (e.code() == Errc::no_partners) continue;
      throw;
    }
    for (auto& partner : ranking.ranked) rows.push_back(std::move(partner.summary));
  }
  return rows;
}

std::string bounds_csv(const std::vector<BoundsSummary>& rows) {
  std::string out = "primary,secondary,lower,median,upper,n_datasets\n";
  for (const auto& b : rows) {
    out += csv_escape(b.primary) + ',' + csv_escape(b.secondary);
    out += ',' + fmt_ratio(b.lower) + ',' + fmt_ratio(b.median) + ',' + fmt_ratio(b.upper);
    out += ',' + std::to_string(b.n_datasets) + '\n';
  }
  return out;
}

std::string bounds_json(const std::vector<BoundsSummary>& rows, RankCriterion criterion) {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["report"] = "bounds_chart";
  doc["criterion"] = to_string(criterion);
  ordered_json entries = ordered_json::array();
  for (const auto& b : rows) {
    ordered_json rec;
    rec["primary"] = b.primary;
    rec["secondary"] = b.secondary;
    rec["lower"] = b.lower;
    rec["median"] = b.median;
    rec["upper"] = b.upper;
    rec["n_datasets"] = b.n_datasets;
    entries.push_back(std::move(rec));
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

std::string bounds_markdown(const std::vector<BoundsSummary>& rows) {
  std::string out = md_row(std::vector<std::string>{
      "primary", "secondary", "lower", "median", "upper", "n_datasets"});
  out += md_separator(6);
  for (const auto& b : rows) {
    out += md_row(std::vector<std::string>{b.primary, b.secondary, fmt_ratio(b.lower),
                                           fmt_ratio(b.median), fmt_ratio(b.upper),
                                           std::to_string(b.n_datasets)});
  }
  return out;
}

std::string mape_table_csv(const MapeTable& table) {
  std::string out = "combination";
  for (const auto& name : table.columns) out += ',' + csv_escape(name);
  out += '\n';
  for (const auto& row : table.rows) {
    out += csv_escape(row.tech_a + " + " + row.tech_b);
    for (const auto& cell : row.cells) {
      out += ',' + (cell.present ? fmt_tenths(cell.tenths) : std::string("NA"));
    }
    out += '\n';
  }
  return out;
}

std::string mape_table_json(const MapeTable& table) {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["report"] = "mape_table";
  doc["datasets"] = table.columns;
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json rec;
    rec["pair"] = {row.tech_a, row.tech_b};
    ordered_json cells = ordered_json::array();
    for (const auto& cell : row.cells) {
      if (!cell.present) {
        cells.push_back(nullptr);
        continue;
      }
      ordered_json c;
      c["percent"] = static_cast<double>(cell.tenths) / 10.0;
      c["column_max"] = cell.column_max;
      cells.push_back(std::move(c));
    }
    rec["cells"] = std::move(cells);
    rows.push_back(std::move(rec));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string mape_table_markdown(const MapeTable& table) {
  std::vector<std::string> header = {"VPR Combinations"};
  for (const auto& name : table.columns) header.push_back(name);
  std::string out = md_row(header);
  out += md_separator(header.size());
  for (const auto& row : table.rows) {
    std::vector<std::string> cells = {row.tech_a + " + " + row.tech_b};
    for (const auto& cell : row.cells) {
      if (!cell.present) {
        cells.push_back("NA");
      } else if (cell.column_max) {
        cells.push_back("**" + fmt_tenths(cell.tenths) + "**");
      } else {
        cells.push_back(fmt_tenths(cell.tenths));
      }
    }
    out += md_row(cells);
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out.good()) throw Error(Errc::io_error, "error while writing '" + path.string() + "'");
}

constexpr const char* extension(ReportFormat f) {
  switch (f) {
    case ReportFormat::csv: return ".csv";
    case ReportFormat::json: return ".json";
    case ReportFormat::markdown: return ".md";
  }
  return ".csv";
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  if (name == "markdown" || name == "md") return ReportFormat::markdown;
  return std::nullopt;
}

std::string render_contingency_csv(const DatasetCollection& c, std::string_view primary,
                                   std::string_view secondary) {
  std::string out = "dataset,primary,secondary,X,W,T,Z,Y,chi2,significant\n";
  for_each_pair(c, primary, secondary, [&](const OutcomeMatrix& m, const std::string& a,
                                           const std::string& b) {
    const ContingencyTable t = build_contingency(m, a, b);
    const McNemarResult r = mcnemar(t);
    out += csv_escape(t.dataset) + ',' + csv_escape(t.primary) + ',' + csv_escape(t.secondary);
    out += ',' + std::to_string(t.both_correct) + ',' + std::to_string(t.only_primary);
    out += ',' + std::to_string(t.only_secondary) + ',' + std::to_string(t.both_incorrect);
    out += ',' + std::to_string(t.total) + ',' + fmt_ratio(r.statistic);
    out += r.significant_at_05 ? ",1\n" : ",0\n";
  });
  return out;
}

std::string render_complement_csv(const DatasetCollection& c, std::string_view primary,
                                  std::string_view secondary) {
  return complement_csv(complement_rows(c, primary, secondary));
}

std::string render_bounds_csv(const DatasetCollection& c, std::string_view primary,
                              std::string_view secondary) {
  const bool explicit_pair = !primary.empty() && !secondary.empty();
  const std::vector<std::string> primaries = primaries_for(c, primary);
  const std::vector<std::string> secondaries = primaries_for(c, secondary);
  std::vector<BoundsSummary> rows;
  for (const auto& a : primaries) {
    for (const auto& b : secondaries) {
      if (a == b) {
        if (explicit_pair) {
          throw Error(Errc::same_pair, "primary and secondary are both '" + a + "'");
        }
        continue;
      }
      if (explicit_pair) {
        rows.push_back(bounds(score_set(c, a, b)));
      } else {
        const ScoreSet s = collect_scores(c, a, b);
        if (!s.scores.empty()) rows.push_back(bounds(s));
      }
    }
  }
  return bounds_csv(rows);
}

std::string render_mape_csv(const DatasetCollection& c,
                            std::span<const std::string> techniques) {
  std::string out = "dataset,techniques,covered,total,mape\n";
  auto append = [&out](const MapeEstimate& e) {
    out += csv_escape(e.dataset) + ',' + csv_escape(join_names(e.techniques));
    out += ',' + std::to_string(e.covered) + ',' + std::to_string(e.total);
    out += ',' + fmt_ratio(e.value) + '\n';
  };

  if (techniques.empty()) {
    const std::vector<std::string> techs = c.technique_names();
    for (std::size_t i = 0; i < techs.size(); ++i) {
      for (std::size_t j = i + 1; j < techs.size(); ++j) {
        for (const auto& m : c.matrices) {
          if (m.find_run(techs[i]) == nullptr || m.find_run(techs[j]) == nullptr) continue;
          append(mape_pair(build_contingency(m, techs[i], techs[j])));
        }
      }
    }
    return out;
  }

  for (const auto& name : techniques) require_known(c, name);
  for (const auto& m : c.matrices) {
    bool all_present = true;
    for (const auto& name : techniques) {
      if (m.find_run(name) == nullptr) {
        all_present = false;
        break;
      }
    }
    if (all_present) append(mape_k(m, techniques));
  }
  return out;
}

std::string render_rank_csv(const DatasetCollection& c, RankCriterion criterion,
                            std::string_view primary) {
  std::string out = "primary,rank,secondary,lower,median,upper,n_datasets\n";
  const std::vector<std::string> primaries = primaries_for(c, primary);
  for (const auto& a : primaries) {
    PartnerRanking ranking;
    try {
      ranking = rank_partners(c, a, criterion);
    } catch (const Error& e) {
      if (primary.empty() && e.code() == Errc::no_partners) continue;
      throw;
    }
    std::size_t rank = 1;
    for (const auto& partner : ranking.ranked) {
      const BoundsSummary& b = partner.summary;
      out += csv_escape(a) + ',' + std::to_string(rank++) + ',' + csv_escape(partner.secondary);
      out += ',' + fmt_ratio(b.lower) + ',' + fmt_ratio(b.median) + ',' + fmt_ratio(b.upper);
      out += ',' + std::to_string(b.n_datasets) + '\n';
    }
  }
  return out;
}

std::vector<std::filesystem::path> emit_report(const DatasetCollection& c,
                                               const std::filesystem::path& out_dir,
                                               std::span<const ReportFormat> formats,
                                               RankCriterion criterion) {
  bool want[3] = {false, false, false};
  for (ReportFormat f : formats) want[static_cast<int>(f)] = true;

  const auto comp = complement_rows(c, {}, {});
  const auto chart = chart_rows(c);
  const auto bnds = bounds_rows(c, criterion);
  const MapeTable table = mape_table(c);

  struct Entry {
    const char* name;
    std::string content[3];  // indexed by ReportFormat
  };
  const Entry entries[] = {
      {"complementarity",
       {complement_csv(comp), complement_json(comp), complement_markdown(comp)}},
      {"complementarity_chart",
       {chart_csv(c, chart), chart_json(c, chart), chart_markdown(c, chart)}},
      {"bounds_chart",
       {bounds_csv(bnds), bounds_json(bnds, criterion), bounds_markdown(bnds)}},
      {"mape_table",
       {mape_table_csv(table), mape_table_json(table), mape_table_markdown(table)}},
  };

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw Error(Errc::io_error, "cannot create '" + out_dir.string() + "': " + ec.message());
  }

  std::vector<std::filesystem::path> manifest;
  for (const Entry& entry : entries) {
    for (ReportFormat f : {ReportFormat::csv, ReportFormat::json, ReportFormat::markdown}) {
      if (!want[static_cast<int>(f)]) continue;
      std::filesystem::path path = out_dir / (std::string(entry.name) + extension(f));
      write_file(path, entry.content[static_cast<int>(f)]);
      manifest.push_back(std::move(path));
    }
  }
  return manifest;
}

}  // namespace vprcomp
