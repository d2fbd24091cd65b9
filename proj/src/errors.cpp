#include "metapool/errors.hpp"

namespace metapool {

const char* errc_name(errc code) {
  switch (code) {
    case errc::non_positive_count: return "NonPositiveCount";
    case errc::negative_sd: return "NegativeSd";
    case errc::non_finite_number: return "NonFiniteNumber";
    case errc::empty_label: return "EmptyLabel";
    case errc::bad_header: return "BadHeader";
    case errc::bad_separator: return "BadSeparator";
    case errc::trailing_separator: return "TrailingSeparator";
    case errc::empty_condition_value: return "EmptyConditionValue";
    case errc::ragged_row: return "RaggedRow";
    case errc::duplicate_key: return "DuplicateKey";
    case errc::invalid_encoding: return "InvalidEncoding";
    case errc::zero_pooled_sd: return "ZeroPooledSd";
    case errc::degenerate_xi: return "DegenerateXi";
    case errc::out_of_domain: return "OutOfDomain";
    case errc::usage: return "Usage";
    case errc::invalid_alpha: return "InvalidAlpha";
    case errc::invalid_kind: return "InvalidKind";
    case errc::io_failure: return "IoFailure";
  }
  return "Unknown";
}

int exit_code_for(const Error& error) {
  if (dynamic_cast<const UsageError*>(&error)) return 2;
  if (dynamic_cast<const ParseError*>(&error)) return 3;
  if (dynamic_cast<const ValidationError*>(&error)) return 3;
  if (dynamic_cast<const AnalysisError*>(&error)) return 4;
  if (dynamic_cast<const IoError*>(&error)) return 5;
  return 1;
}

}  // namespace metapool
