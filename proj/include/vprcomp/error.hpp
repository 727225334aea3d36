#pragma once

#include <stdexcept>
#include <string>

namespace vprcomp {

// Library failure codes. The CLI prints "error[<name>]: <message>" on the
// diagnostic stream and exits 1 for any of these.
enum class Errc {
  parse_error,
  duplicate_query,
  ragged_matrix,
  empty_input,
  unknown_technique,
  same_pair,
  no_defined_scores,
  empty_score_set,
  no_partners,
  duplicate_technique,
  undefined_complementarity,
  invalid_spec,
  duplicate_dataset,
  io_error,
  invalid_argument,
};

constexpr const char* errc_name(Errc code) {
  switch (code) {
    case Errc::parse_error: return "ParseError";
    case Errc::duplicate_query: return "DuplicateQuery";
    case Errc::ragged_matrix: return "RaggedMatrix";
    case Errc::empty_input: return "EmptyInput";
    case Errc::unknown_technique: return "UnknownTechnique";
    case Errc::same_pair: return "SamePair";
    case Errc::no_defined_scores: return "NoDefinedScores";
    case Errc::empty_score_set: return "EmptyScoreSet";
    case Errc::no_partners: return "NoPartners";
    case Errc::duplicate_technique: return "DuplicateTechnique";
    case Errc::undefined_complementarity: return "UndefinedComplementarity";
    case Errc::invalid_spec: return "InvalidSpec";
    case Errc::duplicate_dataset: return "DuplicateDataset";
    case Errc::io_error: return "IoError";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* code_name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace vprcomp
