#pragma once

#include <stdexcept>
#include <string>

namespace metapool {

// Error kinds, grouped by the pipeline stage that raises them.
enum class errc {
  // record validation
  non_positive_count,
  negative_sd,
  non_finite_number,
  empty_label,
  // input parsing
  bad_header,
  bad_separator,
  trailing_separator,
  empty_condition_value,
  ragged_row,
  duplicate_key,
  invalid_encoding,
  // analysis
  zero_pooled_sd,
  degenerate_xi,
  out_of_domain,
  // command line
  usage,
  invalid_alpha,
  invalid_kind,
  // filesystem
  io_failure,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

// Raised by domain-type constructors and validate_record.
class ValidationError : public Error {
public:
  using Error::Error;
};

// Carries the 1-based line number of the offending input line.
class ParseError : public Error {
public:
  ParseError(errc code, long line, const std::string& message)
      : Error(code, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  long line() const { return line_; }

private:
  long line_;
};

class AnalysisError : public Error {
public:
  using Error::Error;
};

class UsageError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  IoError(const std::string& path, const std::string& message)
      : Error(errc::io_failure, path + ": " + message), path_(path) {}

  const std::string& path() const { return path_; }

private:
  std::string path_;
};

// Exit-code families used by the command line tool:
// usage = 2, parse = 3, analysis = 4, io = 5.
int exit_code_for(const Error& error);

}  // namespace metapool
