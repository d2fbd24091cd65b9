#include "metapool/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "metapool/util.hpp"

namespace metapool {

namespace {

constexpr std::string_view kBom = "\xEF\xBB\xBF";

const char* const kDataColumns[8] = {"study",  "variable", "n_1",   "n_2",
                                     "mean_1", "std_1",    "mean_2", "std_2"};

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(';', start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

// Shape checks shared by header and data lines.
void check_line_shape(std::string_view line, long line_no) {
  std::string_view body = line;
  while (!body.empty() && (body.back() == ' ' || body.back() == '\t')) {
    body.remove_suffix(1);
  }
  if (!body.empty() && body.back() == ';') {
    throw ParseError(errc::trailing_separator, line_no,
                     "line ends with ';' (remove the trailing separator)");
  }
  if (body.find(';') == std::string_view::npos &&
      body.find(',') != std::string_view::npos) {
    throw ParseError(errc::bad_separator, line_no,
                     "no ';' found but ',' present; columns must be "
                     "semicolon-separated");
  }
}

std::vector<std::string> parse_header(std::string_view line, long line_no) {
  check_line_shape(line, line_no);
  auto fields = split_fields(line);
  if (fields.size() < 9) {
    throw ParseError(errc::bad_header, line_no,
                     "expected at least 9 columns "
                     "(study;variable;n_1;n_2;mean_1;std_1;mean_2;std_2;"
                     "condition_1), got " +
                         std::to_string(fields.size()));
  }
  for (std::size_t i = 0; i < 8; ++i) {
    if (trim(fields[i]) != kDataColumns[i]) {
      throw ParseError(errc::bad_header, line_no,
                       "column " + std::to_string(i + 1) + " must be '" +
                           kDataColumns[i] + "', got '" +
                           std::string(trim(fields[i])) + "'");
    }
  }
  std::vector<std::string> condition_names;
  for (std::size_t i = 8; i < fields.size(); ++i) {
    const std::string expected = "condition_" + std::to_string(i - 7);
    if (trim(fields[i]) != expected) {
      throw ParseError(errc::bad_header, line_no,
                       "column " + std::to_string(i + 1) + " must be '" +
                           expected + "', got '" +
                           std::string(trim(fields[i])) + "'");
    }
    condition_names.push_back(expected);
  }
  return condition_names;
}

}  // namespace

InputTable parse_input(std::string_view bytes) {
  std::size_t bad_offset = 0;
  if (!utf8_valid(bytes, &bad_offset)) {
    const long line_no =
        1 + static_cast<long>(
                std::count(bytes.begin(), bytes.begin() + bad_offset, '\n'));
    throw ParseError(errc::invalid_encoding, line_no,
                     "input is not valid UTF-8");
  }
  if (bytes.substr(0, kBom.size()) == kBom) bytes.remove_prefix(kBom.size());

  InputTable table;
  std::set<std::string> seen_keys;
  long line_no = 0;
  std::size_t start = 0;
  bool have_header = false;
  while (start <= bytes.size()) {
    std::size_t end = bytes.find('\n', start);
    std::string_view line;
    if (end == std::string_view::npos) {
      if (start == bytes.size()) break;  // input ended with a newline
      line = bytes.substr(start);
      start = bytes.size() + 1;
    } else {
      line = bytes.substr(start, end - start);
      start = end + 1;
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;

    if (!have_header) {
      table.condition_column_names = parse_header(line, line_no);
      table.condition_column_count =
          static_cast<int>(table.condition_column_names.size());
      have_header = true;
      continue;
    }

    check_line_shape(line, line_no);
    auto fields = split_fields(line);
    const std::size_t expected = 8 + table.condition_column_names.size();
    if (fields.size() != expected) {
      throw ParseError(errc::ragged_row, line_no,
                       "expected " + std::to_string(expected) +
                           " fields, got " + std::to_string(fields.size()));
    }

    RawRecord raw;
    raw.study = std::string(trim(fields[0]));
    raw.variable = std::string(trim(fields[1]));
    raw.n1 = std::string(trim(fields[2]));
    raw.n2 = std::string(trim(fields[3]));
    raw.mean1 = std::string(trim(fields[4]));
    raw.std1 = std::string(trim(fields[5]));
    raw.mean2 = std::string(trim(fields[6]));
    raw.std2 = std::string(trim(fields[7]));
    for (std::size_t i = 8; i < fields.size(); ++i) {
      raw.conditions.emplace_back(trim(fields[i]));
    }

    try {
      StudyRecord record = validate_record(raw);
      std::string key = record.study() + '\x1f' + record.variable();
      for (const auto& value : record.conditions()) key += '\x1f' + value;
      if (!seen_keys.insert(key).second) {
        throw ParseError(errc::duplicate_key, line_no,
                         "duplicate (study, variable, conditions): '" +
                             record.study() + "', '" + record.variable() +
                             "'");
      }
      table.records.push_back(std::move(record));
    } catch (const ValidationError& e) {
      throw ParseError(e.code(), line_no, e.what());
    }
  }
  if (!have_header) {
    throw ParseError(errc::bad_header, 1, "empty input (missing header line)");
  }
  return table;
}

InputTable parse_input_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError(path.string(), "read failure");
  return parse_input(buffer.str());
}

std::string to_csv(const InputTable& table) {
  std::string out = "study;variable;n_1;n_2;mean_1;std_1;mean_2;std_2";
  for (const auto& name : table.condition_column_names) out += ";" + name;
  out += '\n';
  for (const auto& record : table.records) {
    out += record.study();
    out += ';';
    out += record.variable();
    out += ';';
    out += std::to_string(record.group1().n());
    out += ';';
    out += std::to_string(record.group2().n());
    out += ';';
    out += format_shortest(record.group1().mean());
    out += ';';
    out += format_shortest(record.group1().sd());
    out += ';';
    out += format_shortest(record.group2().mean());
    out += ';';
    out += format_shortest(record.group2().sd());
    for (const auto& value : record.conditions()) {
      out += ';';
      out += value;
    }
    out += '\n';
  }
  return out;
}

std::string summarize_table(const InputTable& table) {
  if (table.records.empty()) return "0 rows";
  std::set<std::string> studies;
  std::set<std::string> variables;
  // distinct values per column, in first-appearance order
  std::vector<std::vector<std::string>> values(table.condition_column_count);
  for (const auto& record : table.records) {
    studies.insert(record.study());
    variables.insert(record.variable());
    for (int c = 0; c < table.condition_column_count; ++c) {
      auto& seen = values[c];
      const auto& v = record.conditions()[c];
      if (std::find(seen.begin(), seen.end(), v) == seen.end()) {
        seen.push_back(v);
      }
    }
  }
  auto plural = [](std::size_t n, const char* one, const char* many) {
    return std::to_string(n) + " " + (n == 1 ? one : many);
  };
  std::string out = plural(table.records.size(), "row", "rows") + ", " +
                    plural(studies.size(), "study", "studies") + ", " +
                    plural(variables.size(), "variable", "variables");
  for (int c = 0; c < table.condition_column_count; ++c) {
    out += ", " + table.condition_column_names[c] + ": {";
    for (std::size_t i = 0; i < values[c].size(); ++i) {
      if (i > 0) out += ", ";
      out += values[c][i];
    }
    out += "}";
  }
  return out;
}

}  // namespace metapool
