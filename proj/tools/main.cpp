// vprcomp: pairwise complementarity analysis over per-query VPR outcome
// records. Data goes to stdout (or --out); diagnostics go to stderr.
// Exit codes: 0 success, 1 data/validation failure, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vprcomp/dataset_metadata.hpp"
#include "vprcomp/error.hpp"
#include "vprcomp/io.hpp"
#include "vprcomp/ranking.hpp"
#include "vprcomp/report.hpp"
#include "vprcomp/synth.hpp"

#ifndef VPRCOMP_VERSION
#define VPRCOMP_VERSION "0.0.0"
#endif

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

vprcomp::DatasetCollection load_input(const std::string& input, const std::string& informat) {
  vprcomp::OutcomeFormat format;
  if (informat == "csv") {
    format = vprcomp::OutcomeFormat::csv;
  } else if (informat == "json") {
    format = vprcomp::OutcomeFormat::json;
  } else {
    try {
      format = vprcomp::format_from_extension(input);
    } catch (const vprcomp::Error& e) {
      throw UsageError(std::string(e.what()) + " (pass --input-format)");
    }
  }
  return vprcomp::ingest_outcomes(input, format);
}

void write_data(const std::string& data, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw vprcomp::Error(vprcomp::Errc::io_error, "cannot open '" + out_path + "' for writing");
  }
  out << data;
  out.flush();
  if (!out.good()) {
    throw vprcomp::Error(vprcomp::Errc::io_error, "error while writing '" + out_path + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complementarity analysis for visual-place-recognition outcome records"};
  app.require_subcommand(1);
  app.set_version_flag("--version", VPRCOMP_VERSION);

  std::string input;
  std::string informat = "auto";
  std::string out_path;
  std::string primary;
  std::string secondary;
  std::string criterion_name = "median";
  std::vector<std::string> combination;
  std::vector<std::string> format_names = {"csv"};
  std::string metadata_path;
  bool check_table1 = false;
  std::uint64_t seed = 0;
  std::string spec_path;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", input, "outcome records file")->required();
    sub->add_option("--input-format", informat, "input format: csv or json (default: by extension)")
        ->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "write data here instead of stdout");
  };

  CLI::App* cmd_validate = app.add_subcommand("validate", "check structural integrity");
  add_input(cmd_validate);
  cmd_validate->add_flag("--check-table1", check_table1,
                         "cross-check query counts against the bundled VPR-Bench dataset metadata");
  cmd_validate->add_option("--metadata", metadata_path,
                           "metadata CSV to cross-check against instead of the bundled table");

  CLI::App* cmd_contingency =
      app.add_subcommand("contingency", "per-pair outcome quadrants and McNemar statistic");
  add_input(cmd_contingency);
  add_out(cmd_contingency);
  cmd_contingency->add_option("--primary", primary, "restrict to this primary technique");
  cmd_contingency->add_option("--secondary", secondary, "restrict to this secondary technique");

  CLI::App* cmd_complement =
      app.add_subcommand("complement", "per-pair per-dataset complementarity scores");
  add_input(cmd_complement);
  add_out(cmd_complement);
  cmd_complement->add_option("--primary", primary, "restrict to this primary technique");
  cmd_complement->add_option("--secondary", secondary, "restrict to this secondary technique");

  CLI::App* cmd_bounds =
      app.add_subcommand("bounds", "per-pair complementarity bounds across datasets");
  add_input(cmd_bounds);
  add_out(cmd_bounds);
  cmd_bounds->add_option("--primary", primary, "restrict to this primary technique");
  cmd_bounds->add_option("--secondary", secondary, "restrict to this secondary technique");

  CLI::App* cmd_mape =
      app.add_subcommand("mape", "maximum achievable performance estimate per combination");
  add_input(cmd_mape);
  add_out(cmd_mape);
  auto* opt_primary = cmd_mape->add_option("--primary", primary, "first technique of a pair");
  auto* opt_secondary = cmd_mape->add_option("--secondary", secondary, "second technique of a pair");
  auto* opt_k = cmd_mape->add_option("--k", combination, "two or more technique names");
  opt_k->expected(2, -1);
  opt_primary->needs(opt_secondary);
  opt_secondary->needs(opt_primary);
  opt_k->excludes(opt_primary);
  opt_k->excludes(opt_secondary);

  CLI::App* cmd_rank = app.add_subcommand("rank", "rank partner techniques for a primary");
  add_input(cmd_rank);
  add_out(cmd_rank);
  cmd_rank->add_option("--primary", primary, "rank partners for this technique only");
  cmd_rank->add_option("--criterion", criterion_name, "ranking criterion")
      ->check(CLI::IsMember({"median", "upper", "lower"}));

  CLI::App* cmd_report = app.add_subcommand("report", "write the full report tree");
  add_input(cmd_report);
  cmd_report->add_option("--out", out_path, "output directory")->required();
  cmd_report->add_option("--formats", format_names, "csv, json, markdown")
      ->delimiter(',')
      ->check(CLI::IsMember({"csv", "json", "markdown"}));
  cmd_report->add_option("--criterion", criterion_name, "ordering for the bounds chart")
      ->check(CLI::IsMember({"median", "upper", "lower"}));

  CLI::App* cmd_synth = app.add_subcommand("synth", "generate a synthetic outcome collection");
  cmd_synth->add_option("--seed", seed, "base seed for spec entries without one");
  cmd_synth->add_option("--spec", spec_path, "JSON generation spec")->required();
  cmd_synth->add_option("--out", out_path, "output file (.csv or .json)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_validate)) {
      const auto collection = load_input(input, informat);
      auto violations = vprcomp::validate_collection(collection);
      if (check_table1 || !metadata_path.empty()) {
        std::vector<vprcomp::DatasetMeta> metadata =
            metadata_path.empty() ? vprcomp::vprbench_datasets()
                                  : vprcomp::load_dataset_metadata(metadata_path);
        auto extra = vprcomp::cross_check_query_counts(collection, metadata);
        violations.insert(violations.end(), extra.begin(), extra.end());
      }
      for (const auto& v : violations) std::cerr << vprcomp::to_string(v) << "\n";
      std::cout << violations.size() << " violations\n";
      return violations.empty() ? 0 : 1;
    }

    if (app.got_subcommand(cmd_contingency)) {
      const auto collection = load_input(input, informat);
      write_data(vprcomp::render_contingency_csv(collection, primary, secondary), out_path);
      return 0;
    }

    if (app.got_subcommand(cmd_complement)) {
      const auto collection = load_input(input, informat);
      write_data(vprcomp::render_complement_csv(collection, primary, secondary), out_path);
      return 0;
    }

    if (app.got_subcommand(cmd_bounds)) {
      const auto collection = load_input(input, informat);
      write_data(vprcomp::render_bounds_csv(collection, primary, secondary), out_path);
      return 0;
    }

    if (app.got_subcommand(cmd_mape)) {
      const auto collection = load_input(input, informat);
      std::vector<std::string> techniques = combination;
      if (techniques.empty() && !primary.empty()) techniques = {primary, secondary};
      write_data(vprcomp::render_mape_csv(collection, techniques), out_path);
      return 0;
    }

    if (app.got_subcommand(cmd_rank)) {
      const auto collection = load_input(input, informat);
      const auto criterion = vprcomp::parse_criterion(criterion_name);
      write_data(vprcomp::render_rank_csv(collection, *criterion, primary), out_path);
      return 0;
    }

    if (app.got_subcommand(cmd_report)) {
      const auto collection = load_input(input, informat);
      const auto criterion = vprcomp::parse_criterion(criterion_name);
      std::vector<vprcomp::ReportFormat> formats;
      for (const auto& name : format_names) formats.push_back(*vprcomp::parse_report_format(name));
      const auto manifest = vprcomp::emit_report(collection, out_path, formats, *criterion);
      std::string listing;
      for (const auto& path : manifest) listing += path.string() + "\n";
      std::cout << listing;
      return 0;
    }

    if (app.got_subcommand(cmd_synth)) {
      const auto specs = vprcomp::load_synth_specs(spec_path, seed);
      const auto collection = vprcomp::generate_collection(specs);
      vprcomp::OutcomeFormat format;
      try {
        format = vprcomp::format_from_extension(out_path);
      } catch (const vprcomp::Error& e) {
        throw UsageError(std::string(e.what()) + " (--out must end in .csv or .json)");
      }
      vprcomp::write_outcomes(collection, out_path, format);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error[Usage]: " << e.what() << "\n";
    return 2;
  } catch (const vprcomp::Error& e) {
    std::cerr << "error[" << e.code_name() << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error[Internal]: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
