#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "metapool/domain.hpp"

namespace metapool {

// Parsed input file: records in file order, all with the same number of
// condition values.
struct InputTable {
  std::vector<StudyRecord> records;
  int condition_column_count = 0;
  std::vector<std::string> condition_column_names;
};

// Strict semicolon-separated parser. UTF-8 only, "." decimals, header
//   study;variable;n_1;n_2;mean_1;std_1;mean_2;std_2;condition_1[;...]
// byte-exact after whitespace trimming. Every ParseError carries the
// 1-based line number.
InputTable parse_input(std::string_view bytes);

InputTable parse_input_file(const std::filesystem::path& path);

// Inverse of parse_input; a cleanly formatted file reproduces its bytes.
std::string to_csv(const InputTable& table);

// One-line human overview: row/study/variable counts and the distinct
// values seen per condition column (first-appearance order).
std::string summarize_table(const InputTable& table);

}  // namespace metapool
