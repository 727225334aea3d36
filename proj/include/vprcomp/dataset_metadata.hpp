#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "vprcomp/outcomes.hpp"

namespace vprcomp {

// Descriptive metadata for one benchmark dataset.
struct DatasetMeta {
  std::string name;
  std::string environment;
  std::size_t query_images = 0;
  std::size_t ref_images = 0;
  std::string viewpoint_variation;
  std::string conditional_variation;
};

// Metadata for the ten VPR-Bench datasets, bundled so query-count
// cross-checks work without external files. The same table ships as
// data/vprbench_datasets.csv.
const std::vector<DatasetMeta>& vprbench_datasets();

// Loads a metadata CSV with header
// name,environment,query_images,ref_images,viewpoint_variation,conditional_variation
std::vector<DatasetMeta> load_dataset_metadata(const std::filesystem::path& path);

// Lowercase, alphanumeric-only form used to match user dataset names
// against metadata names ("Living-room" and "livingroom" agree).
std::string normalize_dataset_name(std::string_view name);

// Compares each matrix's query count against the metadata entry with the
// same normalized name; datasets without a metadata entry are skipped.
std::vector<Violation> cross_check_query_counts(const DatasetCollection& c,
                                                const std::vector<DatasetMeta>& metadata);

}  // namespace vprcomp
