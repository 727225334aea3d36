#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "vprcomp/outcomes.hpp"

namespace vprcomp {

enum class OutcomeFormat { csv, json };

// Picks the format from the file extension (.csv or .json, case-insensitive);
// throws Error(invalid_argument) for anything else.
OutcomeFormat format_from_extension(const std::filesystem::path& path);

// Parses outcome records and canonicalizes them: datasets sorted by name,
// runs keyed by technique, outcomes sorted by query_id. Input row order is
// therefore irrelevant to every downstream result.
//
// CSV schema (header required, exact): dataset,technique,query_id,correct
// with correct in {0,1}. JSON schema: a top-level array of
// { "dataset": str, "technique": str,
//   "outcomes": [ { "query_id": str, "correct": bool } ] }.
DatasetCollection parse_outcomes(std::string_view text, OutcomeFormat format);
DatasetCollection ingest_outcomes(const std::filesystem::path& path, OutcomeFormat format);

// Inverse of parsing for canonicalized collections:
// parse_outcomes(format_outcomes(c, f), f) == c.
std::string format_outcomes(const DatasetCollection& c, OutcomeFormat format);
void write_outcomes(const DatasetCollection& c, const std::filesystem::path& path,
                    OutcomeFormat format);

}  // namespace vprcomp
